"""Simplicial complexes of F_2^m described by their maximal elements."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .subsets import DimensionError, SubsetMask, check_m, popcount

MAX_FACETS = 20
ENUM_MAX_M = 20


def _as_bits(m: int, x: SubsetMask | int) -> int:
    if isinstance(x, SubsetMask):
        if x.m != m:
            raise DimensionError(f"subset lives in [{x.m}], complex in [{m}]")
        return x.bits
    if x < 0 or x >> m:
        raise DimensionError(f"mask {x:#x} does not fit in [{m}]")
    return x


def _submasks(f: int) -> Iterable[int]:
    s = f
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & f


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of subsets of [m].

    Only the maximal elements are stored (as raw masks, increasing order).
    An empty ``maximal`` tuple is the empty complex; ``(0,)`` is {∅}.
    Build instances through :meth:`from_maximal` so the antichain
    invariant holds.
    """

    m: int
    maximal: tuple[int, ...]

    @classmethod
    def from_maximal(
        cls, m: int, candidates: Iterable[SubsetMask | int]
    ) -> SimplicialComplex:
        check_m(m)
        cands = sorted({_as_bits(m, c) for c in candidates})
        keep = [
            f for f in cands
            if not any(g != f and f & ~g == 0 for g in cands)
        ]
        if len(keep) > MAX_FACETS:
            raise ValueError(f"{len(keep)} maximal elements, cap is {MAX_FACETS}")
        return cls(m, tuple(keep))

    @classmethod
    def generated_by(cls, face: SubsetMask) -> SimplicialComplex:
        """Δ_F: the power set of a single set F."""
        return cls.from_maximal(face.m, [face])

    @classmethod
    def full(cls, m: int) -> SimplicialComplex:
        return cls.from_maximal(m, [(1 << m) - 1])

    @property
    def facets(self) -> list[SubsetMask]:
        return [SubsetMask(self.m, f) for f in self.maximal]

    @property
    def is_full(self) -> bool:
        return self.maximal == ((1 << self.m) - 1,)

    @property
    def single_facet(self) -> int | None:
        """The generating mask when the complex is some Δ_F, else None."""
        return self.maximal[0] if len(self.maximal) == 1 else None

    def __contains__(self, v: SubsetMask | int) -> bool:
        bits = _as_bits(self.m, v)
        return any(bits & ~f == 0 for f in self.maximal)

    @cached_property
    def _ie_terms(self) -> tuple[tuple[int, int], ...]:
        # (coefficient, intersection mask) for every nonempty subfamily,
        # with equal intersections already combined.
        terms: Counter[int] = Counter()
        facets = self.maximal
        full = (1 << self.m) - 1
        for sel in range(1, 1 << len(facets)):
            inter = full
            for i, f in enumerate(facets):
                if sel >> i & 1:
                    inter &= f
            terms[inter] += 1 if popcount(sel) & 1 else -1
        return tuple((c, s) for s, c in sorted(terms.items()) if c)

    def size(self) -> int:
        """|Δ| by inclusion-exclusion over the maximal elements."""
        return sum(c << popcount(s) for c, s in self._ie_terms)

    def eval_sign(self, beta: SubsetMask | int) -> int:
        """Generating function of Δ at x_i = (-1)^{beta_i}.

        Equals the character sum over v in Δ of (-1)^{|v ∩ beta|}. Each
        intersection I of maximal elements contributes 2^{|I|} if it
        misses beta and 0 otherwise.
        """
        b = _as_bits(self.m, beta)
        return sum(c << popcount(s) for c, s in self._ie_terms if s & b == 0)

    def complement_eval_sign(self, beta: SubsetMask | int) -> int:
        """Character sum over F_2^m \\ Δ, using H_Δ + H_{Δ^c} = Π(1 + x_i)."""
        b = _as_bits(self.m, beta)
        return ((1 << self.m) if b == 0 else 0) - self.eval_sign(b)

    def sign_table(self) -> np.ndarray:
        """eval_sign for every beta in 0 .. 2^m - 1, as an int64 array."""
        check_m(self.m, ENUM_MAX_M)
        betas = np.arange(1 << self.m, dtype=np.int64)
        out = np.zeros(1 << self.m, dtype=np.int64)
        for c, s in self._ie_terms:
            out += (c << popcount(s)) * ((betas & s) == 0)
        return out

    def _element_bits(self) -> list[int]:
        check_m(self.m, ENUM_MAX_M)
        seen: set[int] = set()
        for f in self.maximal:
            seen.update(_submasks(f))
        return sorted(seen)

    def enumerate_elements(self) -> list[SubsetMask]:
        return [SubsetMask(self.m, b) for b in self._element_bits()]

    def complement_elements(self) -> list[SubsetMask]:
        inside = set(self._element_bits())
        return [SubsetMask(self.m, b) for b in range(1 << self.m) if b not in inside]

    def element_masks(self) -> list[int]:
        """Raw masks of the members, increasing order."""
        return self._element_bits()

    def complement_masks(self) -> list[int]:
        inside = set(self._element_bits())
        return [b for b in range(1 << self.m) if b not in inside]

    def to_dict(self) -> dict:
        return {"m": self.m, "maximal": [f.elements() for f in self.facets]}

    @classmethod
    def from_dict(cls, data: Mapping) -> SimplicialComplex:
        m = int(data["m"])
        faces = [SubsetMask.from_elements(m, els) for els in data["maximal"]]
        return cls.from_maximal(m, faces)

    @classmethod
    def loads(cls, text: str) -> SimplicialComplex:
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        inner = ",".join(str(f) for f in self.facets)
        return f"Δ[m={self.m}; {inner}]"
