"""The ring R = F_2 + uF_2 (u^2 = 0), Lee weight and the Gray map.

A vector a + ub of R^m is held as two m-bit masks (alpha = a, beta = b),
so additions, inner products and Gray images are word operations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .subsets import DimensionError, SubsetMask, check_m, parity, popcount

_ELEMENT_TEXT = {(0, 0): "0", (1, 0): "1", (0, 1): "u", (1, 1): "1+u"}
_TEXT_ELEMENT = {v: k for k, v in _ELEMENT_TEXT.items()}


@dataclass(frozen=True)
class RingElement:
    """a + ub with a, b in {0, 1}."""

    a: int
    b: int

    def __post_init__(self):
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError(f"not an element of F2+uF2: ({self.a}, {self.b})")

    @classmethod
    def parse(cls, text: str) -> RingElement:
        key = text.replace(" ", "")
        if key == "u+1":
            key = "1+u"
        try:
            return cls(*_TEXT_ELEMENT[key])
        except KeyError:
            raise ValueError(f"unknown ring element {text!r}") from None

    def __add__(self, other: RingElement) -> RingElement:
        return RingElement(self.a ^ other.a, self.b ^ other.b)

    def __mul__(self, other: RingElement) -> RingElement:
        # (a + ub)(c + ud) = ac + u(ad + bc)
        return RingElement(
            self.a & other.a, (self.a & other.b) ^ (self.b & other.a)
        )

    def lee_weight(self) -> int:
        return self.b + (self.a ^ self.b)

    def gray(self) -> tuple[int, int]:
        return (self.b, self.a ^ self.b)

    def __str__(self) -> str:
        return _ELEMENT_TEXT[(self.a, self.b)]


ZERO = RingElement(0, 0)
ONE = RingElement(1, 0)
U = RingElement(0, 1)
ONE_PLUS_U = RingElement(1, 1)
ELEMENTS = (ZERO, ONE, U, ONE_PLUS_U)


@dataclass(frozen=True)
class RingVector:
    """alpha + u*beta in R^m, both parts as m-bit masks."""

    m: int
    alpha: int
    beta: int

    def __post_init__(self):
        check_m(self.m)
        for part in (self.alpha, self.beta):
            if part < 0 or part >> self.m:
                raise ValueError(f"mask {part:#x} does not fit in [{self.m}]")

    @classmethod
    def of(cls, alpha: SubsetMask, beta: SubsetMask) -> RingVector:
        if alpha.m != beta.m:
            raise DimensionError(f"parts differ in dimension: {alpha.m} != {beta.m}")
        return cls(alpha.m, alpha.bits, beta.bits)

    @classmethod
    def from_elements(cls, elems: list[RingElement]) -> RingVector:
        alpha = sum(e.a << i for i, e in enumerate(elems))
        beta = sum(e.b << i for i, e in enumerate(elems))
        return cls(len(elems), alpha, beta)

    @classmethod
    def zero(cls, m: int) -> RingVector:
        return cls(m, 0, 0)

    def __getitem__(self, i: int) -> RingElement:
        """Coordinate i (0-based)."""
        if not 0 <= i < self.m:
            raise IndexError(i)
        return RingElement(self.alpha >> i & 1, self.beta >> i & 1)

    def elements(self) -> list[RingElement]:
        return [self[i] for i in range(self.m)]

    def __add__(self, other: RingVector) -> RingVector:
        return ring_add(self, other)

    # characteristic 2: x - y == x + y
    __sub__ = __add__

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.elements()) + ")"


def _same_m(x: RingVector, y: RingVector) -> None:
    if x.m != y.m:
        raise DimensionError(f"ambient dimensions differ: {x.m} != {y.m}")


def ring_add(x: RingVector, y: RingVector) -> RingVector:
    _same_m(x, y)
    return RingVector(x.m, x.alpha ^ y.alpha, x.beta ^ y.beta)


def scalar_mul(r: RingElement, x: RingVector) -> RingVector:
    alpha = x.alpha if r.a else 0
    beta = (x.beta if r.a else 0) ^ (x.alpha if r.b else 0)
    return RingVector(x.m, alpha, beta)


def inner_product(x: RingVector, y: RingVector) -> RingElement:
    """<alpha + u beta, t1 + u t2> = alpha.t1 + u(alpha.t2 + beta.t1)."""
    _same_m(x, y)
    return RingElement(
        parity(x.alpha & y.alpha),
        parity(x.alpha & y.beta) ^ parity(x.beta & y.alpha),
    )


def gray(x: RingVector) -> int:
    """Gray image (b, a+b) packed into a 2m-bit int.

    Bits 0..m-1 hold b, bits m..2m-1 hold a XOR b.
    """
    return x.beta | (x.alpha ^ x.beta) << x.m


def gray_bits(x: RingVector) -> list[int]:
    g = gray(x)
    return [g >> i & 1 for i in range(2 * x.m)]


def lee_weight(x: RingVector) -> int:
    return popcount(x.beta) + popcount(x.alpha ^ x.beta)


def lee_distance(x: RingVector, y: RingVector) -> int:
    return lee_weight(ring_add(x, y))
