"""Exact weight distributions and their serialized forms."""

from __future__ import annotations

import re
from collections.abc import Mapping
from typing import Iterable, Iterator

_TERM = re.compile(r"^(\d*)(?:z(?:\^\{?(\d+)\}?)?)?$")


class WeightDistribution(Mapping):
    """Immutable mapping weight -> frequency (Python ints, never floats).

    Zero frequencies are dropped on construction; repeated weights in the
    input pairs are summed, which is how formula tables get merged.
    """

    __slots__ = ("_data",)

    def __init__(self, items: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        pairs = items.items() if isinstance(items, Mapping) else items
        acc: dict[int, int] = {}
        for w, f in pairs:
            w, f = int(w), int(f)
            if w < 0:
                raise ValueError(f"negative weight {w}")
            acc[w] = acc.get(w, 0) + f
        for w, f in acc.items():
            if f < 0:
                raise ValueError(f"negative frequency {f} at weight {w}")
        self._data = {w: acc[w] for w in sorted(acc) if acc[w]}

    def __getitem__(self, w: int) -> int:
        return self._data[w]

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._data == dict(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._data.items()))

    def __repr__(self) -> str:
        return f"WeightDistribution({self._data!r})"

    @property
    def total(self) -> int:
        return sum(self._data.values())

    def nonzero_weights(self) -> list[int]:
        return [w for w in self._data if w]

    def min_nonzero_weight(self) -> int | None:
        nz = self.nonzero_weights()
        return nz[0] if nz else None

    def divided(self, k: int) -> WeightDistribution:
        """Every frequency divided by ``k``; refuses inexact division."""
        bad = [w for w, f in self._data.items() if f % k]
        if bad:
            raise ValueError(f"frequencies at weights {bad} not divisible by {k}")
        return WeightDistribution({w: f // k for w, f in self._data.items()})

    def to_records(self) -> list[dict[str, int]]:
        return [{"weight": w, "frequency": f} for w, f in self._data.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> WeightDistribution:
        return cls((r["weight"], r["frequency"]) for r in records)

    def to_poly(self) -> str:
        """Enumerator string such as ``1+6z^4+z^8``."""
        terms = []
        for w, f in self._data.items():
            if w == 0:
                terms.append(str(f))
                continue
            coef = "" if f == 1 else str(f)
            terms.append(f"{coef}z" if w == 1 else f"{coef}z^{w}")
        return "+".join(terms) or "0"

    @classmethod
    def from_poly(cls, text: str) -> WeightDistribution:
        pairs = []
        for tok in text.replace(" ", "").split("+"):
            match = _TERM.match(tok)
            if not tok or not match:
                raise ValueError(f"bad enumerator term {tok!r}")
            coef, exp = match.groups()
            if "z" not in tok:
                pairs.append((0, int(coef)))
            else:
                pairs.append((int(exp) if exp else 1, int(coef) if coef else 1))
        return cls(pairs)
