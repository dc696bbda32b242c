"""Closed-form message-indexed Lee weight distributions.

Each evaluator takes only the sizes |A|, |B|, |A ∪ B| of the generating
sets. Formula rows are fed to WeightDistribution, which sums rows that
land on the same weight and drops rows of frequency zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import Family
from .distribution import WeightDistribution
from .simplicial import SimplicialComplex
from .subsets import popcount


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SpectrumParams:
    m: int
    size_a: int
    size_b: int
    size_union: int

    def __post_init__(self):
        if self.m < 1:
            raise PreconditionError(f"m={self.m} must be positive")
        if not (0 <= self.size_a <= self.m and 0 <= self.size_b <= self.m):
            raise PreconditionError(f"set sizes must lie in 0..{self.m}")
        lo = max(self.size_a, self.size_b)
        hi = min(self.m, self.size_a + self.size_b)
        if not lo <= self.size_union <= hi:
            raise PreconditionError(
                f"|A∪B|={self.size_union} impossible for |A|={self.size_a}, "
                f"|B|={self.size_b}, m={self.m}"
            )

    @classmethod
    def from_masks(cls, m: int, a: int, b: int) -> SpectrumParams:
        return cls(m, popcount(a), popcount(b), popcount(a | b))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def table1_thm32(p: SpectrumParams) -> WeightDistribution:
    """L1 = Δ_A + uΔ_B^c, 0 < |B| < m."""
    m, a, b, u = p.m, p.size_a, p.size_b, p.size_union
    _require(0 < b < m, "need 0 < |B| < m")
    return WeightDistribution([
        (0, 2 ** (m - a)),
        (2 ** (m + a), 2 ** (m - a) * (2 ** (m - u) - 1)),
        (2**a * (2**m - 2**b), 2 ** (2 * m) + 2 ** (m - a) * (2 ** (m - u) - 2 ** (m + 1 - b))),
        (2 ** (m + a) - 2 ** (a + b - 1), 2 ** (m - a + 1) * (2 ** (m - b) - 2 ** (m - u))),
    ])


def table2_cor34(m: int, size_b: int) -> WeightDistribution:
    """L1 = uΔ_B^c (Δ1 = {∅})."""
    b = size_b
    _require(0 < b < m, "need 0 < |B| < m")
    return WeightDistribution([
        (0, 2**m),
        (2**m, 2**m * (2 ** (m - b) - 1)),
        (2**m - 2**b, 2 ** (2 * m) - 2 ** (2 * m - b)),
    ])


def table3_cor35(m: int, size_b: int) -> WeightDistribution:
    """L1 = F_2^m + uΔ_B^c."""
    b = size_b
    _require(0 < b < m, "need 0 < |B| < m")
    return WeightDistribution([
        (0, 1),
        (2**m * (2**m - 2**b), 2 ** (2 * m) - 2 ** (m + 1 - b) + 1),
        (2 ** (2 * m) - 2 ** (m - 1 + b), 2 ** (m + 1 - b) - 2),
    ])


def table4_thm36(p: SpectrumParams) -> WeightDistribution:
    """L2 = Δ_A^c + uΔ_B^c, 0 < |A|, |B| < m."""
    m, a, b, u = p.m, p.size_a, p.size_b, p.size_union
    _require(0 < a < m and 0 < b < m, "need 0 < |A| < m and 0 < |B| < m")
    n = (2**m - 2**a) * (2**m - 2**b)
    return WeightDistribution([
        (0, 1),
        # alpha = 0, beta ≠ 0 disjoint from A: counted by 2^{m-|A|} - 1
        (2**m * (2**m - 2**b), 2 ** (m - a) - 1),
        (n + 2 ** (b - 1) * (2**m - 2 ** (a + 1)), 2 * (2 ** (m - u) - 1)),
        (n + 2 ** (b - 1) * (2**m - 2**a), 2 * (2 ** (m - b) - 2 ** (m - u))),
        (n - 2 ** (a + b), (2 ** (m - a) - 2) * (2 ** (m - u) - 1)),
        (n - 2 ** (a + b - 1), 2 * (2 ** (m - a) - 1) * (2 ** (m - b) - 2 ** (m - u))),
        (n, 2 ** (2 * m) + 2 ** (m - a) * (1 + 2 ** (m - u) - 2 ** (m + 1 - b)) - 2 ** (m - a)),
    ])


def table5_thm38(m: int, size_a: int) -> WeightDistribution:
    """L2 = Δ_A^c with t2 = 0, 0 < |A| < m."""
    a = size_a
    _require(0 < a < m, "need 0 < |A| < m")
    return WeightDistribution([
        (0, 1),
        (2**m, (2 ** (m - a) - 1) ** 2),
        (2**m - 2**a, (2**m - 2 ** (m - a)) ** 2),
        (2 ** (m - 1), 2 * (2 ** (m - a) - 1)),
        (2 ** (m - 1) - 2 ** (a - 1), 2 * (2**m - 2 ** (m - a))),
        (2**m - 2 ** (a - 1), 2 * (2**m - 2 ** (m - a)) * (2 ** (m - a) - 1)),
    ])


def table6_cor39(m: int) -> WeightDistribution:
    """table5 at |A| = m - 1."""
    _require(m >= 2, "need m >= 2")
    return WeightDistribution([
        (0, 1),
        (2**m, 1),
        (2 ** (m - 1), 2 ** (2 * m) - 2 ** (m + 2) + 6),
        (2 ** (m - 2), 2 ** (m + 1) - 4),
        (2**m - 2 ** (m - 2), 2 ** (m + 1) - 4),
    ])


def weight_count_classifier(p: SpectrumParams, family: Family | str) -> int:
    """Number of distinct nonzero weights in the merged closed form."""
    family = Family(family)
    if family is Family.L1:
        dist = table1_thm32(p)
    elif family is Family.L2:
        dist = table4_thm36(p)
    else:
        raise PreconditionError(f"classifier covers L1 and L2, not {family}")
    return len(dist.nonzero_weights())


def nominal_weight_count(p: SpectrumParams, family: Family | str) -> int | None:
    """Weight count claimed when A ∪ B = [m] or A ⊆ B, before rows merge.

    2 for L1 and 4 for L2; None when neither condition holds.
    """
    family = Family(family)
    if p.size_union == p.m or p.size_union == p.size_b:
        return {Family.L1: 2, Family.L2: 4}.get(family)
    return None


def closed_forms(family: Family | str, d1: SimplicialComplex,
                 d2: SimplicialComplex | None = None) -> dict[str, WeightDistribution]:
    """Every closed form that applies to a concrete construction.

    Keys are evaluator names. Empty when a complex has several maximal
    elements or the size preconditions fail.
    """
    family = Family(family)
    m = d1.m
    fa = d1.single_facet
    if fa is None:
        return {}
    a = popcount(fa)
    out: dict[str, WeightDistribution] = {}
    if family is Family.L2PLAIN:
        if 0 < a < m:
            out["table5_thm38"] = table5_thm38(m, a)
            if a == m - 1:
                out["table6_cor39"] = table6_cor39(m)
        return out
    fb = d2.single_facet if d2 is not None else None
    if fb is None:
        return {}
    p = SpectrumParams.from_masks(m, fa, fb)
    b = p.size_b
    if family is Family.L1:
        if 0 < b < m:
            out["table1_thm32"] = table1_thm32(p)
            if a == 0:
                out["table2_cor34"] = table2_cor34(m, b)
            if a == m:
                out["table3_cor35"] = table3_cor35(m, b)
    elif 0 < a < m and 0 < b < m:
        out["table4_thm36"] = table4_thm36(p)
    return out


def code_length(family: Family | str, m: int, size_a: int, size_b: int = 0) -> int:
    family = Family(family)
    if family is Family.L1:
        return 2**size_a * (2**m - 2**size_b)
    if family is Family.L2:
        return (2**m - 2**size_a) * (2**m - 2**size_b)
    return 2**m - 2**size_a
