"""Order-4 classification experiments.

Two independent classifiers split the 576 order-4 quasigroups:

  * witness search: a quasigroup is Fractal when some bounded-length leader
    string makes the string-transformation family member a permutation;
  * period growth: a quasigroup is Fractal when iterating the elementary
    transformation on a periodic string keeps the minimal period within a
    linear envelope for every constant leader.

Both reproduce the same published 192-member class under default settings,
and the census report surfaces any disagreement between them instead of
reconciling it silently.
"""
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import enumerate_order4
from .errors import BudgetExceeded
from .inversion import resolve_budget
from .transforms import Const, Index, OwfSpec, e_transform, r_n

# Lexicographic indices (1-based) of the published Fractal class. The count
# announced alongside the list is 192, and this rendition of the list has
# exactly 192 entries; the census diff is computed against it either way.
PUBLISHED_FRACTAL_COUNT = 192
PUBLISHED_FRACTAL = (
    1, 2, 3, 4, 5, 7, 9, 11, 14, 18, 21, 24,
    25, 26, 27, 28, 37, 40, 43, 46, 49, 51, 54, 57,
    60, 63, 70, 71, 77, 80, 82, 83, 92, 93, 100, 101,
    110, 111, 113, 116, 121, 126, 127, 132, 133, 138, 139, 144,
    145, 146, 147, 148, 157, 160, 163, 166, 169, 170, 171, 172,
    174, 176, 178, 179, 182, 185, 189, 192, 196, 197, 203, 206,
    212, 213, 218, 222, 223, 228, 229, 232, 234, 235, 242, 243,
    246, 252, 253, 259, 262, 263, 269, 272, 274, 275, 284, 285,
    292, 293, 302, 303, 305, 308, 314, 315, 318, 324, 325, 331,
    334, 335, 342, 343, 345, 348, 349, 354, 355, 359, 364, 365,
    371, 374, 380, 381, 385, 388, 392, 395, 398, 399, 401, 403,
    405, 406, 407, 408, 411, 414, 417, 420, 429, 430, 431, 432,
    433, 438, 439, 444, 445, 450, 451, 456, 461, 464, 466, 467,
    476, 477, 484, 485, 494, 495, 497, 500, 506, 507, 514, 517,
    520, 523, 526, 528, 531, 534, 537, 540, 549, 550, 551, 552,
    553, 556, 559, 563, 566, 568, 570, 572, 573, 574, 575, 576,
)

FRACTAL = "Fractal"
NON_FRACTAL = "NonFractal"


def leader_strings(order, n, max_len, include_indices=False):
    """All leader strings of length 0..max_len in deterministic search order.

    Tokens at each position: constants 0..order-1, then (optionally) index
    leaders i_0..i_{n-1}; strings of a given length enumerate in product
    order over that token sequence.
    """
    tokens = [Const(v) for v in range(order)]
    if include_indices:
        tokens += [Index(j) for j in range(n)]
    for length in range(max_len + 1):
        yield from itertools.product(tokens, repeat=length)


def permutation_search(q, n, max_len, include_indices=False, budget=None):
    """First leader string whose family member is a bijection on Q^n.

    Returns the witness leader tuple, or None when no string within the
    length bound works. Candidates are rejected at the first repeated
    output, so the common (non-bijective) case is cheap.
    """
    s = q.order
    total = s**n
    limit = resolve_budget(budget)
    if total > limit:
        raise BudgetExceeded(f"domain size {total} exceeds budget {limit}")
    inputs = list(itertools.product(range(s), repeat=n))
    weights = [s**e for e in range(n - 1, -1, -1)]
    for leaders in leader_strings(s, n, max_len, include_indices):
        spec = OwfSpec(q, n, leaders)
        seen = bytearray(total)
        ok = True
        for a in inputs:
            out = r_n(spec, a)
            packed = sum(w * v for w, v in zip(weights, out))
            if seen[packed]:
                ok = False
                break
            seen[packed] = 1
        if ok:
            return leaders
    return None


def minimal_period(seq):
    """Smallest p >= 1 with seq[i] == seq[i+p] wherever both sides exist.

    Border-based: p = len - (longest proper border), the standard prefix
    function construction.
    """
    n = len(seq)
    if n == 0:
        return 0
    pi = [0] * n
    k = 0
    for i in range(1, n):
        while k and seq[i] != seq[k]:
            k = pi[k - 1]
        if seq[i] == seq[k]:
            k += 1
        pi[i] = k
    return n - pi[-1]


@dataclass(frozen=True)
class PeriodPoint:
    """Minimal period of iterate k. When only the window-length bound is
    observable (raw period exceeding half the window), period is reported
    as the width itself and capped is set."""

    k: int
    period: int
    capped: bool


@dataclass(frozen=True)
class ClassifySettings:
    """Defaults calibrated so both classifiers reproduce the published
    192-member class."""

    alpha: int = 4
    iterations: int = 32
    width: int = 4096
    motif: tuple = (0, 1, 2, 3)
    leaders: tuple = None  # None: every constant leader of the quasigroup
    n: int = 2
    max_len: int = 4
    include_indices: bool = False

    @property
    def threshold(self):
        return self.alpha * self.iterations * len(self.motif)

    def leaders_for(self, q):
        return tuple(range(q.order)) if self.leaders is None else tuple(self.leaders)


@dataclass
class ClassLabel:
    label: str
    permutation_witness: tuple
    period_profile: tuple       # profile of the leader with the largest final period
    profiles: dict              # leader -> tuple of PeriodPoint
    period_at_k: int            # max over leaders of the final reported period

    @property
    def is_fractal(self):
        return self.label == FRACTAL


def _window(motif, width):
    if not motif:
        raise ValueError("motif must be non-empty")
    if width % len(motif):
        raise ValueError(f"width {width} is not a multiple of motif length {len(motif)}")
    return list(motif) * (width // len(motif))


def _period_point(k, row, width):
    raw = minimal_period(row)
    if 2 * raw > width:
        return PeriodPoint(k, width, True)
    return PeriodPoint(k, raw, False)


def period_profile(q, leader, motif=(0, 1, 2, 3), width=4096, iterations=32):
    """Minimal period of each iterate of the leader-l elementary
    transformation, starting from the periodic extension of motif."""
    row = _window(motif, width)
    points = []
    for k in range(1, iterations + 1):
        row = list(e_transform(q, leader, row))
        points.append(_period_point(k, row, width))
    return tuple(points)


def classify(q, settings=None):
    """Label by period growth; attach a permutation witness independently.

    Fractal means every constant leader keeps the final reported period
    within alpha * iterations * |motif|.
    """
    st = settings or ClassifySettings()
    profiles = {}
    for l in st.leaders_for(q):
        profiles[l] = period_profile(q, l, st.motif, st.width, st.iterations)
    worst = max(profiles, key=lambda l: profiles[l][-1].period)
    period_at_k = profiles[worst][-1].period
    label = FRACTAL if period_at_k <= st.threshold else NON_FRACTAL
    witness = permutation_search(q, st.n, st.max_len, st.include_indices)
    return ClassLabel(label=label, permutation_witness=witness,
                      period_profile=profiles[worst], profiles=profiles,
                      period_at_k=period_at_k)


@dataclass
class CensusReport:
    """Census of all 576 order-4 quasigroups.

    labels follow the witness criterion; period data is attached per entry
    and any disagreement between the two criteria lands in disagreements.
    Indices are 1-based lexicographic.
    """

    fractal: tuple
    non_fractal: tuple
    witnesses: dict             # index -> leader tuple or None
    periods: dict               # index -> PeriodPoint at the final iterate
    parameters: "ClassifySettings"
    disagreements: tuple = ()   # indices where period label != witness label

    @property
    def published_missing(self):
        return tuple(sorted(set(PUBLISHED_FRACTAL) - set(self.fractal)))

    @property
    def published_extra(self):
        return tuple(sorted(set(self.fractal) - set(PUBLISHED_FRACTAL)))

    @property
    def matches_published(self):
        return not self.published_missing and not self.published_extra


def _batched_final_rows(tables, leaders, motif, width, iterations):
    """Final iterate for every (table, leader) pair at once.

    tables: (m, s, s) int array. Returns (m * len(leaders), width) int8,
    batch index = table_index * len(leaders) + leader_position. The scan
    runs position by position across the whole batch.
    """
    m, s, _ = tables.shape
    nl = len(leaders)
    b = m * nl
    tflat = np.ascontiguousarray(tables, dtype=np.int64).reshape(m * s * s)
    offs = np.repeat(np.arange(m) * s * s, nl)
    lead = np.tile(np.array(leaders, dtype=np.int64), m)
    window = np.array(_window(motif, width), dtype=np.int64)
    rows = np.broadcast_to(window, (b, width)).copy()
    for _ in range(iterations):
        x = lead.copy()
        for j in range(width):
            x = tflat[offs + x * s + rows[:, j]]
            rows[:, j] = x
    return rows.astype(np.int8)


def _batched_periods(rows, width):
    """Reported period per row: smallest p <= width/2 that shifts the row
    onto itself, else the width with the capped mark."""
    b = rows.shape[0]
    period = np.full(b, width, dtype=np.int64)
    capped = np.ones(b, dtype=bool)
    open_idx = np.arange(b)
    sub = rows
    for p in range(1, width // 2 + 1):
        hit = (sub[:, p:] == sub[:, :-p]).all(axis=1)
        if hit.any():
            solved = open_idx[hit]
            period[solved] = p
            capped[solved] = False
            keep = ~hit
            open_idx = open_idx[keep]
            sub = sub[keep]
            if open_idx.size == 0:
                break
    return period, capped


def _census_range(lo, hi, st):
    """Census rows for 1-based indices lo..hi-1. Pure; safe to run in a
    worker process."""
    squares = enumerate_order4()[lo - 1:hi - 1]
    tables = np.array([q.table for q in squares], dtype=np.int64)
    leaders = st.leaders_for(squares[0])
    rows = _batched_final_rows(tables, leaders, st.motif, st.width, st.iterations)
    per, cap = _batched_periods(rows, st.width)
    nl = len(leaders)
    out = []
    for i, q in enumerate(squares):
        idx = lo + i
        pp = per[i * nl:(i + 1) * nl]
        cc = cap[i * nl:(i + 1) * nl]
        worst = int(pp.argmax())
        point = PeriodPoint(st.iterations, int(pp[worst]), bool(cc[worst]))
        witness = permutation_search(q, st.n, st.max_len, st.include_indices)
        out.append((idx, witness, point))
    return out


def census_order4(settings=None, workers=None):
    """Classify all 576 order-4 quasigroups by witness search, with the
    period criterion computed alongside for the coincidence check."""
    st = settings or ClassifySettings()
    total = len(enumerate_order4())
    if workers and workers > 1:
        bounds = np.linspace(1, total + 1, workers + 1).astype(int)
        ranges = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if a < b]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_census_range_star, [(a, b, st) for a, b in ranges]))
        entries = [e for part in parts for e in part]
    else:
        entries = _census_range(1, total + 1, st)
    entries.sort(key=lambda e: e[0])
    fractal, non_fractal, witnesses, periods, disagree = [], [], {}, {}, []
    for idx, witness, point in entries:
        witnesses[idx] = witness
        periods[idx] = point
        (fractal if witness is not None else non_fractal).append(idx)
        period_label = point.period <= st.threshold
        if period_label != (witness is not None):
            disagree.append(idx)
    return CensusReport(fractal=tuple(fractal), non_fractal=tuple(non_fractal),
                        witnesses=witnesses, periods=periods, parameters=st,
                        disagreements=tuple(disagree))


def _census_range_star(args):
    return _census_range(*args)
