"""Griesmer-bound checks for the binary Gray images."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .codes import InconsistencyError
from .distribution import WeightDistribution

# Optimality claims for specific parameters that rest on tables of
# best-known codes. They are echoed, never computed.
EXTERNAL_CLAIMS: dict[tuple[int, int, int], str] = {
    (12, 6, 3): "almost optimal (best-known-code tables)",
    (8, 6, 2): "distance optimal (best-known-code tables)",
}


@dataclass(frozen=True)
class BinaryParams:
    n: int
    k: int
    d: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k={self.k} must be >= 1")
        if not 1 <= self.d <= self.n:
            raise ValueError(f"need 1 <= d <= n, got d={self.d}, n={self.n}")

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d}]"


def griesmer_sum(k: int, d: int) -> int:
    """Σ_{i<k} ceil(d / 2^i)."""
    if k < 1 or d < 1:
        raise ValueError(f"griesmer_sum needs k, d >= 1 (got k={k}, d={d})")
    return sum((d + (1 << i) - 1) >> i for i in range(k))


def meets_griesmer(p: BinaryParams) -> bool:
    return griesmer_sum(p.k, p.d) == p.n


def distance_optimal_by_griesmer(p: BinaryParams) -> bool:
    """True when no [n, k, d+1] code can exist by the Griesmer bound.

    False only means the certificate is inconclusive.
    """
    return griesmer_sum(p.k, p.d + 1) > p.n


@dataclass(frozen=True)
class CertificationReport:
    n: int
    k: int
    d: int
    griesmer_sum_d: int
    griesmer_sum_d_plus_1: int
    meets_griesmer: bool
    distance_optimal_griesmer: bool
    annotations: tuple[dict, ...] = field(default=())

    @property
    def params(self) -> BinaryParams:
        return BinaryParams(self.n, self.k, self.d)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["annotations"] = [dict(a) for a in self.annotations]
        return out


def certify_params(p: BinaryParams) -> CertificationReport:
    notes = []
    claim = EXTERNAL_CLAIMS.get((p.n, p.k, p.d))
    if claim:
        notes.append({"claim": claim, "verdict": "external"})
    return CertificationReport(
        n=p.n,
        k=p.k,
        d=p.d,
        griesmer_sum_d=griesmer_sum(p.k, p.d),
        griesmer_sum_d_plus_1=griesmer_sum(p.k, p.d + 1),
        meets_griesmer=meets_griesmer(p),
        distance_optimal_griesmer=distance_optimal_by_griesmer(p),
        annotations=tuple(notes),
    )


def binary_params(dist: WeightDistribution, n: int, kernel_size: int) -> BinaryParams:
    """[2n, log2(#codewords), min nonzero weight] from a message-indexed Lee spectrum."""
    total = dist.total
    if kernel_size < 1 or total % kernel_size:
        raise InconsistencyError(f"kernel size {kernel_size} does not divide {total}")
    if dist.get(0) != kernel_size:
        raise InconsistencyError(
            f"weight-0 frequency {dist.get(0)} differs from kernel size {kernel_size}"
        )
    size = total // kernel_size
    if size & (size - 1):
        raise InconsistencyError(f"{size} codewords is not a power of two")
    d = dist.min_nonzero_weight()
    if d is None:
        raise InconsistencyError("code has no nonzero codeword")
    return BinaryParams(2 * n, size.bit_length() - 1, d)


def certify(dist: WeightDistribution, n: int, kernel_size: int) -> CertificationReport:
    return certify_params(binary_params(dist, n, kernel_size))
