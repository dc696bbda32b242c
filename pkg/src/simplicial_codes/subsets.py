"""Subsets of [m] = {1, ..., m} stored as m-bit masks.

Element i of [m] lives at bit position i - 1, so a mask is also the
vector of F_2^m whose support is the subset. Every ordering of F_2^m used
elsewhere in the package is the increasing order of these integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_M = 30


class DimensionError(ValueError):
    """Raised when objects living in different ambient dimensions are mixed."""


def check_m(m: int, cap: int = MAX_M) -> int:
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"m must be an int, got {type(m).__name__}")
    if not 1 <= m <= cap:
        raise ValueError(f"m={m} out of range 1..{cap}")
    return m


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity(x: int) -> int:
    """Parity of |x|; for masks s, t the F_2 dot product is parity(s & t)."""
    return popcount(x) & 1


@dataclass(frozen=True, order=True)
class SubsetMask:
    """A subset of [m]; ``bits`` has bit i-1 set iff i is a member."""

    m: int
    bits: int

    def __post_init__(self):
        check_m(self.m)
        if self.bits < 0 or self.bits >> self.m:
            raise ValueError(f"mask {self.bits:#x} does not fit in [{self.m}]")

    @classmethod
    def from_elements(cls, m: int, elements: Iterable[int]) -> SubsetMask:
        bits = 0
        for e in elements:
            if not 1 <= e <= m:
                raise ValueError(f"element {e} not in [1..{m}]")
            bits |= 1 << (e - 1)
        return cls(m, bits)

    @classmethod
    def full(cls, m: int) -> SubsetMask:
        return cls(m, (1 << m) - 1)

    @classmethod
    def empty(cls, m: int) -> SubsetMask:
        return cls(m, 0)

    @classmethod
    def parse(cls, m: int, text: str) -> SubsetMask:
        """Parse ``"{1,3}"``, ``"1,3"`` or ``"{}"``."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        body = body.strip()
        if not body:
            return cls.empty(m)
        return cls.from_elements(m, (int(tok) for tok in body.split(",")))

    def elements(self) -> list[int]:
        return [i + 1 for i in range(self.m) if self.bits >> i & 1]

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.m and bool(self.bits >> (element - 1) & 1)

    def issubset(self, other: SubsetMask) -> bool:
        _same_m(self, other)
        return self.bits & ~other.bits == 0

    def __or__(self, other: SubsetMask) -> SubsetMask:
        _same_m(self, other)
        return SubsetMask(self.m, self.bits | other.bits)

    def __and__(self, other: SubsetMask) -> SubsetMask:
        _same_m(self, other)
        return SubsetMask(self.m, self.bits & other.bits)

    def __xor__(self, other: SubsetMask) -> SubsetMask:
        return sym_diff(self, other)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements())) + "}"


def _same_m(x: SubsetMask, y: SubsetMask) -> None:
    if x.m != y.m:
        raise DimensionError(f"ambient dimensions differ: {x.m} != {y.m}")


def chi(x: SubsetMask, a: SubsetMask) -> int:
    """1 if x and a are disjoint, else 0."""
    _same_m(x, a)
    return int(x.bits & a.bits == 0)


def sym_diff(x: SubsetMask, y: SubsetMask) -> SubsetMask:
    _same_m(x, y)
    return SubsetMask(x.m, x.bits ^ y.bits)


def enumerate_subsets(m: int) -> Iterator[SubsetMask]:
    """All 2^m subsets of [m] in increasing bit-pattern order."""
    check_m(m)
    for bits in range(1 << m):
        yield SubsetMask(m, bits)
