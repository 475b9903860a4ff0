"""String transformations driven by a quasigroup, and the reverse-leader
functions built from them.

The elementary step takes a leader symbol l and a string (a_0, ..., a_{N-1})
and produces (b_0, ..., b_{N-1}) with b_0 = l * a_0 and b_i = b_{i-1} * a_i.
Every function here is a composition of such steps; they differ only in
where the leader sequence comes from:

  single reverse   leaders are the input string reversed
  double reverse   the reversed input, twice
  general family   a preprocessing leader string (constants and index
                   references into the input), then the reversed input twice

Leader application order follows the worked numeric examples: the resolved
leader sequence is consumed left to right, the first listed leader applied
first, and the reversed input contributes (a_{N-1}, ..., a_0) in that order.
"""
from dataclasses import dataclass

from .errors import (
    EmptyString,
    IndexLeaderOutOfRange,
    LengthMismatch,
    OrderMismatch,
    SymbolOutOfRange,
)


def _check_string(q, a):
    if len(a) == 0:
        raise EmptyString("transformations are defined for strings of length >= 1")
    for x in a:
        if not 0 <= x < q.order:
            raise OrderMismatch(f"symbol {x} not in [0, {q.order})")


def e_transform(q, leader, a):
    """Apply one elementary transformation with the given constant leader.

    Args:
        q: the quasigroup.
        leader: seed symbol; the first output is leader * a[0].
        a: nonempty input string over q's symbols.

    Returns the transformed string as a tuple, the same length as a.
    """
    a = tuple(a)
    _check_string(q, a)
    if not 0 <= leader < q.order:
        raise SymbolOutOfRange(f"leader {leader} not in [0, {q.order})")
    table = q.table
    out = []
    x = leader
    for sym in a:
        x = table[x][sym]
        out.append(x)
    return tuple(out)


def e_inverse(q, leader, b):
    """Invert e_transform for the same leader.

    Uniqueness of left division makes the step bijective for every fixed
    leader, so e_inverse(q, l, e_transform(q, l, a)) == a always holds.
    """
    b = tuple(b)
    _check_string(q, b)
    if not 0 <= leader < q.order:
        raise SymbolOutOfRange(f"leader {leader} not in [0, {q.order})")
    ldiv = q._ldiv
    out = []
    prev = leader
    for x in b:
        out.append(ldiv[prev][x])
        prev = x
    return tuple(out)


def apply_leader_sequence(q, leaders, a):
    """Apply one e_transform per leader, first listed leader first.

    An empty leader sequence returns the input unchanged.
    """
    a = tuple(a)
    _check_string(q, a)
    for l in leaders:
        a = e_transform(q, l, a)
    return a


def transformation_rows(q, leaders, a):
    """Return every row of the computation: the input, then one row per leader.

    Row k+1 is e_transform with leaders[k] applied to row k. Useful for
    reproducing worked tables and for rendering.
    """
    a = tuple(a)
    _check_string(q, a)
    rows = [a]
    for l in leaders:
        rows.append(e_transform(q, l, rows[-1]))
    return rows


def r1(q, a):
    """Single reverse transformation: leaders are the reversed input."""
    a = tuple(a)
    return apply_leader_sequence(q, a[::-1], a)


def r2(q, a):
    """Double reverse transformation: the reversed input applied twice."""
    a = tuple(a)
    rev = a[::-1]
    return apply_leader_sequence(q, rev + rev, a)


@dataclass(frozen=True)
class Const:
    """A leader that is a fixed symbol of the quasigroup."""

    value: int


@dataclass(frozen=True)
class Index:
    """A leader that refers to position j of the input string."""

    j: int


@dataclass(frozen=True)
class OwfSpec:
    """A fully determined member of the general family: quasigroup, input
    length N, and preprocessing leader string (possibly empty)."""

    q: object
    n: int
    leaders: tuple

    def __post_init__(self):
        object.__setattr__(self, "leaders", tuple(self.leaders))
        if self.n < 1:
            raise LengthMismatch("N must be at least 1")
        for tok in self.leaders:
            if isinstance(tok, Const):
                if not 0 <= tok.value < self.q.order:
                    raise SymbolOutOfRange(f"constant leader {tok.value} out of range")
            elif isinstance(tok, Index):
                if not 0 <= tok.j < self.n:
                    raise IndexLeaderOutOfRange(f"index leader i{tok.j} outside 0..{self.n - 1}")
            else:
                raise TypeError(f"leader token must be Const or Index, got {tok!r}")


def resolve_leaders(spec, a):
    """Resolve the preprocessing leaders against the input and append the
    reversed input twice.

    Index tokens are resolved once, against the original input; intermediate
    strings never re-resolve them. The result has length len(leaders) + 2N.
    """
    a = tuple(a)
    if len(a) != spec.n:
        raise LengthMismatch(f"input length {len(a)} != N = {spec.n}")
    resolved = tuple(a[t.j] if isinstance(t, Index) else t.value for t in spec.leaders)
    rev = a[::-1]
    return resolved + rev + rev


def r_n(spec, a):
    """Evaluate the general family member on input a (length spec.n)."""
    a = tuple(a)
    _check_string(spec.q, a)
    return apply_leader_sequence(spec.q, resolve_leaders(spec, a), a)


def pack_string(a, s):
    """Encode a string as an integer, base s, first symbol most significant.

    For s = 4 this matches the two-bit-letter convention: (3, 0) -> 12.
    """
    v = 0
    for x in a:
        if not 0 <= x < s:
            raise SymbolOutOfRange(f"symbol {x} not in [0, {s})")
        v = v * s + x
    return v


def unpack_string(value, s, n):
    """Decode pack_string: the length-n string whose base-s value is given."""
    if not 0 <= value < s**n:
        raise SymbolOutOfRange(f"value {value} not in [0, {s}^{n})")
    out = [0] * n
    for j in range(n - 1, -1, -1):
        out[j] = value % s
        value //= s
    return tuple(out)
