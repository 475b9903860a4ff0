"""Finite quasigroups represented as Latin squares.

A quasigroup of order s is an s-by-s table over the symbols 0..s-1 in which
every row and every column is a permutation. That property makes both
division equations u * x = v and y * u = v uniquely solvable, which is what
every transformation and attack in this package leans on.
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache
from random import Random

from .errors import (
    ColNotPermutation,
    EntryOutOfRange,
    NotSquare,
    OrderNotSupported,
    RowNotPermutation,
    SymbolOutOfRange,
)


class Quasigroup:
    """An immutable order-s quasigroup with O(1) multiplication and division.

    Left and right division tables are precomputed at construction: the
    attacks perform millions of divisions and must not scan rows. Use
    validate() to build one from an untrusted table.
    """

    __slots__ = ("order", "table", "_ldiv", "_rdiv")

    def __init__(self, table):
        rows = [tuple(int(v) for v in row) for row in table]
        s = len(rows)
        if s == 0 or any(len(row) != s for row in rows):
            raise NotSquare("table must be a nonempty square matrix")
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if not 0 <= v < s:
                    raise EntryOutOfRange(i, j, v)
        full = frozenset(range(s))
        for i, row in enumerate(rows):
            if frozenset(row) != full:
                raise RowNotPermutation(i)
        for j in range(s):
            if frozenset(row[j] for row in rows) != full:
                raise ColNotPermutation(j)
        ldiv = [[0] * s for _ in range(s)]
        rdiv = [[0] * s for _ in range(s)]
        for u in range(s):
            for v in range(s):
                w = rows[u][v]
                ldiv[u][w] = v      # u * ldiv[u][w] = w
                rdiv[v][w] = u      # rdiv[v][w] * v = w
        object.__setattr__(self, "order", s)
        object.__setattr__(self, "table", tuple(rows))
        object.__setattr__(self, "_ldiv", tuple(tuple(r) for r in ldiv))
        object.__setattr__(self, "_rdiv", tuple(tuple(r) for r in rdiv))

    def __setattr__(self, name, value):
        raise AttributeError("Quasigroup is immutable")

    def __eq__(self, other):
        return isinstance(other, Quasigroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"Quasigroup(order={self.order})"

    def _check(self, *symbols):
        for x in symbols:
            if not 0 <= x < self.order:
                raise SymbolOutOfRange(f"symbol {x} not in [0, {self.order})")

    def mul(self, u, v):
        """Return u * v."""
        self._check(u, v)
        return self.table[u][v]

    def ldiv(self, u, v):
        """Return the unique x with u * x = v."""
        self._check(u, v)
        return self._ldiv[u][v]

    def rdiv(self, u, v):
        """Return the unique y with y * u = v."""
        self._check(u, v)
        return self._rdiv[u][v]


def validate(table):
    """Build a Quasigroup from a table, raising a domain error if it is not
    a Latin square.

    Errors are specific: NotSquare, EntryOutOfRange, RowNotPermutation, or
    ColNotPermutation, in that checking order.
    """
    return Quasigroup(table)


@dataclass(frozen=True)
class AlgebraicProfile:
    """Outcome of exhaustive commutativity and associativity checks.

    A witness is present exactly when the property fails, and is the first
    counterexample in lexicographic scan order.
    """

    commutative: bool
    associative: bool
    commutativity_witness: tuple | None
    associativity_witness: tuple | None


def algebraic_probe(q):
    """Exhaustively test commutativity and associativity of q.

    Returns an AlgebraicProfile. The attacks assume both properties fail;
    callers use this probe to surface violations of that hypothesis.
    """
    s = q.order
    t = q.table
    comm_w = None
    for u in range(s):
        for v in range(u + 1, s):
            if t[u][v] != t[v][u]:
                comm_w = (u, v)
                break
        if comm_w:
            break
    assoc_w = None
    for u, v, w in itertools.product(range(s), repeat=3):
        if t[t[u][v]][w] != t[u][t[v][w]]:
            assoc_w = (u, v, w)
            break
    return AlgebraicProfile(
        commutative=comm_w is None,
        associative=assoc_w is None,
        commutativity_witness=comm_w,
        associativity_witness=assoc_w,
    )


@lru_cache(maxsize=1)
def _order4_tables():
    perms = list(itertools.permutations(range(4)))
    found = []
    for r0 in perms:
        for r1 in perms:
            if any(r1[c] == r0[c] for c in range(4)):
                continue
            for r2 in perms:
                if any(r2[c] in (r0[c], r1[c]) for c in range(4)):
                    continue
                for r3 in perms:
                    if any(r3[c] in (r0[c], r1[c], r2[c]) for c in range(4)):
                        continue
                    found.append((r0, r1, r2, r3))
    found.sort(key=lambda rows: rows[0] + rows[1] + rows[2] + rows[3])
    return tuple(found)


@lru_cache(maxsize=1)
def enumerate_order4():
    """Return all 576 order-4 quasigroups in ascending row-major order.

    The 1-based position of a square in this sequence is its lexicographic
    number; positions are stable because the ordering is a total order on
    the flattened 16-symbol strings.
    """
    return tuple(Quasigroup(rows) for rows in _order4_tables())


@lru_cache(maxsize=1)
def _order4_index():
    return {rows: k for k, rows in enumerate(_order4_tables(), start=1)}


def lex_index(q):
    """Return the 1-based lexicographic number of an order-4 quasigroup."""
    if q.order != 4:
        raise OrderNotSupported(f"lexicographic numbering is defined for order 4, got {q.order}")
    return _order4_index()[q.table]


def from_index(k):
    """Return the order-4 quasigroup with lexicographic number k (1-based)."""
    tables = _order4_tables()
    if not 1 <= k <= len(tables):
        raise OrderNotSupported(f"index {k} outside 1..{len(tables)}")
    return Quasigroup(tables[k - 1])


def random_latin(s, seed):
    """Generate a pseudorandom order-s Latin square, deterministically.

    Rows are placed one at a time; each row tries symbols in a freshly
    shuffled candidate order and backtracks on dead ends. The same (s, seed)
    pair always produces the identical square. The sampler is not uniform
    over all Latin squares, which is acceptable for attack benchmarking.
    """
    if s < 1:
        raise OrderNotSupported("order must be at least 1")
    rng = Random(seed)
    rows = []

    def place_row():
        if len(rows) == s:
            return True
        used = [set() for _ in range(s)]
        for row in rows:
            for j, v in enumerate(row):
                used[j].add(v)
        order = list(range(s))
        rng.shuffle(order)

        def fill(row):
            j = len(row)
            if j == s:
                rows.append(row)
                if place_row():
                    return True
                rows.pop()
                return False
            for v in order:
                if v not in row and v not in used[j]:
                    if fill(row + [v]):
                        return True
            return False

        return fill([])

    place_row()
    return Quasigroup(rows)
