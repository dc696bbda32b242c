"""Cardinalities of the χ-defined sets that feed every frequency column.

For A, B ⊆ [m]:

* S1 = {X ≠ ∅ : X ∩ A = X ∩ B = ∅},  S0 = {X : X meets A or B}
* T_j = {(X, Y) : X, Y ≠ ∅, X ≠ Y, Y ∩ B = ∅,
         χ(X|A) + χ(X⊕Y|A) = j}           for j = 0, 1, 2

Closed forms sit next to brute-force counters that walk the defining
predicates directly; the CLI exposes both.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .subsets import DimensionError, SubsetMask, check_m

BRUTE_MAX_M = 10


@dataclass(frozen=True)
class CountingParams:
    m: int
    A: SubsetMask
    B: SubsetMask

    def __post_init__(self):
        check_m(self.m)
        for s in (self.A, self.B):
            if s.m != self.m:
                raise DimensionError(f"subset in [{s.m}] used with m={self.m}")

    @classmethod
    def from_elements(cls, m: int, a: list[int], b: list[int]) -> CountingParams:
        return cls(m, SubsetMask.from_elements(m, a), SubsetMask.from_elements(m, b))

    @property
    def sizes(self) -> tuple[int, int, int]:
        """(|A|, |B|, |A ∪ B|)."""
        return len(self.A), len(self.B), len(self.A | self.B)


def s_sizes(p: CountingParams) -> tuple[int, int]:
    """(|S1|, |S0|)."""
    m = p.m
    _, _, u = p.sizes
    return 2 ** (m - u) - 1, 2**m - 2 ** (m - u)


def t_sizes(p: CountingParams) -> tuple[int, int, int]:
    """(|T2|, |T1|, |T0|)."""
    m = p.m
    a, b, u = p.sizes
    t2 = (2 ** (m - a) - 2) * (2 ** (m - u) - 1)
    t1 = 2 * (2 ** (m - a) - 1) * (2 ** (m - b) - 2 ** (m - u))
    t0 = 2**m * (2 ** (m - b) - 1) + 2 ** (m - a) * (
        1 + 2 ** (m - u) - 2 ** (m + 1 - b)
    )
    return t2, t1, t0


def t_total(p: CountingParams) -> int:
    """|T2| + |T1| + |T0| = #{(X, Y) : X, Y ≠ ∅, X ≠ Y, Y ∩ B = ∅}."""
    m = p.m
    _, b, _ = p.sizes
    return (2 ** (m - b) - 1) * (2**m - 2)


def _brute_check(p: CountingParams) -> None:
    check_m(p.m, BRUTE_MAX_M)


def s_sizes_bruteforce(p: CountingParams) -> tuple[int, int]:
    _brute_check(p)
    a, b = p.A.bits, p.B.bits
    s1 = s0 = 0
    for x in range(1 << p.m):
        prod = (x & a == 0) and (x & b == 0)
        if not prod:
            s0 += 1
        elif x:
            s1 += 1
    return s1, s0


def _t_counts_for_xs(m: int, a: int, b: int, xs: range) -> tuple[int, int, int]:
    counts = [0, 0, 0]
    ys = [y for y in range(1, 1 << m) if y & b == 0]
    for x in xs:
        if x == 0:
            continue
        cx = x & a == 0
        for y in ys:
            if y == x:
                continue
            counts[cx + ((x ^ y) & a == 0)] += 1
    return counts[2], counts[1], counts[0]


def t_sizes_bruteforce(p: CountingParams, workers: int = 1) -> tuple[int, int, int]:
    """Count T2, T1, T0 by walking all ordered pairs (X, Y).

    With ``workers > 1`` the X range is split into contiguous blocks that
    are counted in separate processes; the partial counts are summed.
    """
    _brute_check(p)
    n = 1 << p.m
    a, b = p.A.bits, p.B.bits
    if workers <= 1:
        return _t_counts_for_xs(p.m, a, b, range(n))
    step = -(-n // workers)
    blocks = [range(lo, min(lo + step, n)) for lo in range(0, n, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_t_counts_for_xs, [p.m] * len(blocks),
                              [a] * len(blocks), [b] * len(blocks), blocks))
    return tuple(sum(col) for col in zip(*parts))  # type: ignore[return-value]
