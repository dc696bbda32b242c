"""Codes over F_2 + uF_2 defined by products of simplicial complexes.

A defining set L = P1 + uP2 is the ordered product of two lists of masks
(t1 outer, t2 inner). The code is the image of a ↦ (<a, l>)_{l ∈ L} for a
ranging over R^m, and three constructions are supported:

* ``L1``      : Δ1 + uΔ2^c
* ``L2``      : Δ1^c + uΔ2^c
* ``L2plain`` : Δ1^c  (t2 pinned to 0)

Two Lee spectra are computed independently: by evaluating every codeword
coordinate, and by character sums over the complexes.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from .distribution import WeightDistribution
from .ring import RingElement, RingVector, inner_product
from .simplicial import SimplicialComplex
from .subsets import DimensionError

ENUM_MAX_M = 8
# total bits held by an explicit distinct-codeword set
DISTINCT_MAX_BITS = 1 << 31


class Family(str, Enum):
    L1 = "L1"
    L2 = "L2"
    L2PLAIN = "L2plain"

    def __str__(self) -> str:
        return self.value


class ConstructionError(ValueError):
    """A defining set would be empty or is inconsistent with its complexes."""


class EnumerationCapError(ValueError):
    """Exhaustive enumeration requested beyond the supported m."""


class InconsistencyError(RuntimeError):
    """An internal structural identity failed; signals a construction bug."""


@dataclass(frozen=True)
class DefiningSet:
    m: int
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    family: Family | None = None
    delta1: SimplicialComplex | None = field(default=None, compare=False)
    delta2: SimplicialComplex | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.part1 or not self.part2:
            raise ConstructionError("defining set is empty")

    def __len__(self) -> int:
        return len(self.part1) * len(self.part2)

    def elements(self) -> list[RingVector]:
        """t1 + u t2 in canonical product order, t2 varying fastest."""
        return [RingVector(self.m, t1, t2) for t1 in self.part1 for t2 in self.part2]

    @cached_property
    def _arrays(self) -> tuple[np.ndarray, np.ndarray]:
        t1 = np.repeat(np.asarray(self.part1, dtype=np.int64), len(self.part2))
        t2 = np.tile(np.asarray(self.part2, dtype=np.int64), len(self.part1))
        return t1, t2


def _check_pair(d1: SimplicialComplex, d2: SimplicialComplex) -> None:
    if d1.m != d2.m:
        raise DimensionError(f"complexes in dimensions {d1.m} and {d2.m}")


def make_L1(d1: SimplicialComplex, d2: SimplicialComplex) -> DefiningSet:
    _check_pair(d1, d2)
    part1 = tuple(d1.element_masks())
    part2 = tuple(d2.complement_masks())
    if not part1:
        raise ConstructionError("L1 needs a nonempty Δ1")
    if not part2:
        raise ConstructionError("L1 needs Δ2 ≠ F_2^m (Δ2^c is empty)")
    return DefiningSet(d1.m, part1, part2, Family.L1, d1, d2)


def make_L2(d1: SimplicialComplex, d2: SimplicialComplex) -> DefiningSet:
    _check_pair(d1, d2)
    part1 = tuple(d1.complement_masks())
    part2 = tuple(d2.complement_masks())
    if not part1:
        raise ConstructionError("L2 needs Δ1 ≠ F_2^m (Δ1^c is empty)")
    if not part2:
        raise ConstructionError(
            "L2 needs Δ2 ≠ F_2^m (Δ2^c is empty); use make_L2_plain for L2 = Δ1^c"
        )
    return DefiningSet(d1.m, part1, part2, Family.L2, d1, d2)


def make_L2_plain(d1: SimplicialComplex) -> DefiningSet:
    part1 = tuple(d1.complement_masks())
    if not part1:
        raise ConstructionError("L2plain needs Δ1 ≠ F_2^m (Δ1^c is empty)")
    return DefiningSet(d1.m, part1, (0,), Family.L2PLAIN, d1, None)


def build(family: Family | str, d1: SimplicialComplex,
          d2: SimplicialComplex | None = None) -> DefiningSet:
    family = Family(family)
    if family is Family.L2PLAIN:
        return make_L2_plain(d1)
    if d2 is None:
        raise ConstructionError(f"{family} needs two complexes")
    return make_L1(d1, d2) if family is Family.L1 else make_L2(d1, d2)


def _check_enum(m: int) -> None:
    if m > ENUM_MAX_M:
        raise EnumerationCapError(
            f"exhaustive enumeration is capped at m <= {ENUM_MAX_M} (got m={m})"
        )


def codeword(L: DefiningSet, a: RingVector) -> list[RingElement]:
    """c_a coordinate by coordinate; slow reference path."""
    return [inner_product(a, l) for l in L.elements()]


def _parity_table(m: int) -> np.ndarray:
    return (np.bitwise_count(np.arange(1 << m, dtype=np.uint32)) & 1).astype(np.uint8)


def _bruteforce_block(m: int, part1: tuple[int, ...], part2: tuple[int, ...],
                      alphas: list[int]) -> dict[int, int]:
    par = _parity_table(m)
    t1 = np.repeat(np.asarray(part1, dtype=np.int64), len(part2))
    t2 = np.tile(np.asarray(part2, dtype=np.int64), len(part1))
    betas = np.arange(1 << m, dtype=np.int64)
    q = par[betas[:, None] & t1[None, :]]  # beta . t1, one row per beta
    tally: Counter[int] = Counter()
    # alphas go through in slabs of at most ~2^22 coordinate evaluations
    slab = max(1, (1 << 22) // q.size)
    for lo in range(0, len(alphas), slab):
        al = np.asarray(alphas[lo:lo + slab], dtype=np.int64)[:, None]
        a_bit = par[al & t1[None, :]][:, None, :]
        r = par[al & t2[None, :]][:, None, :]
        b_bit = q[None, :, :] ^ r
        lee = (b_bit.sum(axis=2, dtype=np.int64)
               + (b_bit ^ a_bit).sum(axis=2, dtype=np.int64))
        counts = np.bincount(lee.ravel())
        for w in np.flatnonzero(counts):
            tally[int(w)] += int(counts[w])
    return dict(tally)


def _split(n: int, parts: int) -> list[list[int]]:
    step = -(-n // parts)
    return [list(range(lo, min(lo + step, n))) for lo in range(0, n, step)]


def lee_spectrum_bruteforce(L: DefiningSet, workers: int = 1) -> WeightDistribution:
    """Message-indexed Lee distribution by evaluating every coordinate.

    For each a = alpha + u beta the codeword coordinate at l = t1 + u t2 is
    (alpha.t1) + u(alpha.t2 + beta.t1); its Lee weight is b + (a XOR b).
    ``workers`` splits the alpha range across processes (0 = all CPUs);
    the result does not depend on it.
    """
    _check_enum(L.m)
    if workers == 0:
        workers = os.cpu_count() or 1
    n_alpha = 1 << L.m
    if workers <= 1:
        tally = _bruteforce_block(L.m, L.part1, L.part2, list(range(n_alpha)))
        return WeightDistribution(tally)
    blocks = _split(n_alpha, min(workers, n_alpha))
    total: Counter[int] = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_bruteforce_block, L.m, L.part1, L.part2, blk)
                   for blk in blocks]
        for fut in futures:
            total.update(fut.result())
    return WeightDistribution(total)


def _check_consistent(L: DefiningSet) -> None:
    if L.family is None or L.delta1 is None:
        raise ConstructionError("defining set carries no complexes; build it with make_L1/L2")
    rebuilt = build(L.family, L.delta1, L.delta2)
    if rebuilt.part1 != L.part1 or rebuilt.part2 != L.part2:
        raise ConstructionError(f"defining set does not match family {L.family} "
                                "and its complexes")


def part_sign_tables(L: DefiningSet) -> tuple[np.ndarray, np.ndarray]:
    """Σ_{t ∈ P}(-1)^{x.t} for every x, for P = part1 and P = part2.

    Complex sums come from the inclusion-exclusion evaluator; complement
    sums use Σ_{Δ^c} = 2^m [x = 0] - Σ_Δ.
    """
    _check_consistent(L)
    m = L.m
    delta = np.zeros(1 << m, dtype=np.int64)
    delta[0] = 1 << m
    h1 = L.delta1.sign_table()
    s1 = h1 if L.family is Family.L1 else delta - h1
    if L.family is Family.L2PLAIN:
        s2 = np.ones(1 << m, dtype=np.int64)
    else:
        s2 = delta - L.delta2.sign_table()
    return s1, s2


def lee_weights_charsum(L: DefiningSet) -> np.ndarray:
    """Matrix w[alpha, beta] of Lee weights from the character-sum identity.

    w = |L| - 1/2 * S2(alpha) * (S1(beta) + S1(alpha XOR beta)).
    """
    _check_enum(L.m)
    s1, s2 = part_sign_tables(L)
    idx = np.arange(1 << L.m, dtype=np.int64)
    bracket = s1[None, :] + s1[idx[:, None] ^ idx[None, :]]
    twice = s2[:, None] * bracket
    if np.any(twice & 1):
        raise InconsistencyError("odd character sum product")
    return len(L) - twice // 2


def lee_spectrum_charsum(L: DefiningSet) -> WeightDistribution:
    w = lee_weights_charsum(L)
    if w.min() < 0:
        raise InconsistencyError("negative Lee weight from character sums")
    counts = np.bincount(w.ravel())
    return WeightDistribution({i: int(c) for i, c in enumerate(counts) if c})


def _codeword_rows(L: DefiningSet, alpha: int, par: np.ndarray,
                   q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    t1, t2 = L._arrays
    a_bit = np.broadcast_to(par[alpha & t1], q.shape)
    b_bit = q ^ par[alpha & t2]
    return a_bit, b_bit


def kernel_size(L: DefiningSet) -> int:
    """#{a : c_a = 0}, by enumerating all messages."""
    _check_enum(L.m)
    par = _parity_table(L.m)
    t1, _ = L._arrays
    betas = np.arange(1 << L.m, dtype=np.int64)
    q = par[betas[:, None] & t1[None, :]]
    count = 0
    for alpha in range(1 << L.m):
        a_bit, b_bit = _codeword_rows(L, alpha, par, q)
        count += int(np.count_nonzero(~(a_bit.any(axis=1) | b_bit.any(axis=1))))
    return count


@dataclass(frozen=True)
class DistinctCode:
    """Deduplicated code.

    Each codeword is an int over 2n bits: bit i is the F_2-part of
    coordinate i, bit n + i its u-part.
    """

    n: int
    codewords: frozenset[int]
    kernel_size: int

    def coordinates(self, word: int) -> list[RingElement]:
        return [RingElement(word >> i & 1, word >> (self.n + i) & 1) for i in range(self.n)]

    def lee_weight(self, word: int) -> int:
        mask = (1 << self.n) - 1
        a, b = word & mask, word >> self.n
        return b.bit_count() + (a ^ b).bit_count()

    def lee_distribution(self) -> WeightDistribution:
        return WeightDistribution(Counter(self.lee_weight(c) for c in self.codewords))


def _pack_rows(bits: np.ndarray) -> list[int]:
    packed = np.packbits(bits, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def distinct_code(L: DefiningSet) -> DistinctCode:
    """Enumerate all c_a, deduplicate and measure the evaluation kernel."""
    _check_enum(L.m)
    n = len(L)
    if (1 << 2 * L.m) * 2 * n > DISTINCT_MAX_BITS:
        raise EnumerationCapError(
            f"explicit codeword set too large ({4 ** L.m} messages x {2 * n} bits)"
        )
    par = _parity_table(L.m)
    t1, _ = L._arrays
    betas = np.arange(1 << L.m, dtype=np.int64)
    q = par[betas[:, None] & t1[None, :]]
    words: set[int] = set()
    zero_msgs = 0
    for alpha in range(1 << L.m):
        a_bit, b_bit = _codeword_rows(L, alpha, par, q)
        rows = np.concatenate([a_bit, b_bit], axis=1)
        zero_msgs += int(np.count_nonzero(~rows.any(axis=1)))
        words.update(_pack_rows(rows))
    if len(words) * zero_msgs != 1 << 2 * L.m:
        raise InconsistencyError(
            f"{len(words)} codewords x kernel {zero_msgs} != 4^{L.m}"
        )
    return DistinctCode(n, frozenset(words), zero_msgs)


@dataclass(frozen=True)
class BinaryCode:
    n: int
    k: int
    d: int | None
    weight_distribution: WeightDistribution
    words: frozenset[int] = field(repr=False, compare=False)

    @property
    def params(self) -> tuple[int, int, int | None]:
        return self.n, self.k, self.d


def gray_word(code: DistinctCode, word: int) -> int:
    """Gray image of one codeword as an int over 2n bits: (b | a+b)."""
    mask = (1 << code.n) - 1
    a, b = word & mask, word >> code.n
    return b | (a ^ b) << code.n


def gray_image(code: DistinctCode) -> BinaryCode:
    size = len(code.codewords)
    if size & (size - 1):
        raise InconsistencyError(f"{size} codewords is not a power of two")
    words = frozenset(gray_word(code, c) for c in code.codewords)
    dist = WeightDistribution(Counter(w.bit_count() for w in words))
    return BinaryCode(
        n=2 * code.n,
        k=size.bit_length() - 1,
        d=dist.min_nonzero_weight(),
        weight_distribution=dist,
        words=words,
    )
