"""Exit-criteria sweeps, shared by ``selftest`` and the test suite.

Each ``criterion_*`` function returns a list of :class:`CheckResult`;
a criterion passes when every one of its checks passes.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .codes import (Family, build, distinct_code, gray_image, kernel_size,
                    lee_spectrum_bruteforce, lee_spectrum_charsum)
from .counting import (CountingParams, s_sizes, s_sizes_bruteforce, t_sizes,
                       t_sizes_bruteforce, t_total)
from .distribution import WeightDistribution
from .optimality import (BinaryParams, binary_params, distance_optimal_by_griesmer,
                         griesmer_sum, meets_griesmer)
from .ring import RingVector, gray, lee_distance, ring_add
from .simplicial import SimplicialComplex
from .spectra import (SpectrumParams, closed_forms, table1_thm32, table4_thm36)
from .subsets import SubsetMask


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        extra = f" -- {self.detail}" if self.detail else ""
        return f"[{flag}] {self.name} ({self.seconds:.2f}s){extra}"


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, ok, detail, time.perf_counter() - t0)


@dataclass(frozen=True)
class WorkedExample:
    label: str
    m: int
    family: Family
    a: tuple[int, ...]
    b: tuple[int, ...]
    params: tuple[int, int, int]
    enumerator: str

    def complexes(self) -> tuple[SimplicialComplex, SimplicialComplex | None]:
        d1 = SimplicialComplex.generated_by(SubsetMask.from_elements(self.m, self.a))
        if self.family is Family.L2PLAIN:
            return d1, None
        return d1, SimplicialComplex.generated_by(SubsetMask.from_elements(self.m, self.b))


WORKED_EXAMPLES = (
    WorkedExample("L1 m=2 A=B={1}", 2, Family.L1, (1,), (1,), (8, 3, 4), "1+6z^4+z^8"),
    WorkedExample("L1 m=2 A={1,2} B={1}", 2, Family.L1, (1, 2), (1,), (16, 4, 8),
                  "1+13z^8+2z^12"),
    WorkedExample("L2 m=3 A={1} B={2,3}", 3, Family.L2, (1,), (2, 3), (48, 6, 20),
                  "1+6z^20+54z^24+z^32+2z^36"),
    WorkedExample("L2 m=3 A=B={1,2}", 3, Family.L2, (1, 2), (1, 2), (32, 6, 16),
                  "1+62z^16+z^32"),
    WorkedExample("L2plain m=3 A={1}", 3, Family.L2PLAIN, (1,), (), (12, 6, 3),
                  "1+8z^3+6z^4+16z^6+24z^7+9z^8"),
    WorkedExample("L2plain m=3 A={1,2}", 3, Family.L2PLAIN, (1, 2), (), (8, 6, 2),
                  "1+12z^2+38z^4+12z^6+z^8"),
)


def run_worked_example(ex: WorkedExample):
    d1, d2 = ex.complexes()
    return gray_image(distinct_code(build(ex.family, d1, d2)))


def criterion_1() -> list[CheckResult]:
    """The six worked binary codes, exact parameters and enumerators."""
    out = []
    for ex in WORKED_EXAMPLES:
        def check(ex=ex):
            code = run_worked_example(ex)
            want = WeightDistribution.from_poly(ex.enumerator)
            got = code.weight_distribution
            ok = code.params == ex.params and got == want
            return ok, (f"got [{code.n},{code.k},{code.d}] {got.to_poly()}; "
                        f"expected {list(ex.params)} {want.to_poly()}")
        out.append(_timed(f"C1 {ex.label}", check))
    return out


def single_facet_cases(m: int) -> Iterator[tuple[Family, int, int | None]]:
    """Every concrete (family, A, B) mask triple meeting the closed-form preconditions."""
    full = (1 << m) - 1
    for b in range(1, full):
        for a in range(full + 1):
            yield Family.L1, a, b
            if 0 < a < full:
                yield Family.L2, a, b
    for a in range(1, full):
        yield Family.L2PLAIN, a, None


def _complexes(m: int, a: int, b: int | None):
    d1 = SimplicialComplex.from_maximal(m, [a])
    d2 = SimplicialComplex.from_maximal(m, [b]) if b is not None else None
    return d1, d2


def criterion_2(m_values=range(2, 6)) -> list[CheckResult]:
    """closed form == brute force == character sum for all concrete pairs."""
    out = []
    for m in m_values:
        def check(m=m):
            cases = 0
            for family, a, b in single_facet_cases(m):
                d1, d2 = _complexes(m, a, b)
                L = build(family, d1, d2)
                bf = lee_spectrum_bruteforce(L)
                cs = lee_spectrum_charsum(L)
                forms = closed_forms(family, d1, d2)
                if not forms:
                    return False, f"no closed form for {family} A={a:#x} B={b}"
                for name, dist in forms.items():
                    if not (dist == bf == cs):
                        return False, (f"{name} {family} A={a:#x} B={b}: closed "
                                       f"{dist.to_poly()} brute {bf.to_poly()} "
                                       f"charsum {cs.to_poly()}")
                cases += 1
            return True, f"{cases} constructions"
        out.append(_timed(f"C2 three-way spectra m={m}", check))
    return out


def criterion_3(m_values=range(1, 6)) -> list[CheckResult]:
    out = []
    for m in m_values:
        def check(m=m):
            for a in range(1 << m):
                for b in range(1 << m):
                    p = CountingParams(m, SubsetMask(m, a), SubsetMask(m, b))
                    if s_sizes(p) != s_sizes_bruteforce(p):
                        return False, f"S sizes differ at A={a:#x} B={b:#x}"
                    closed = t_sizes(p)
                    if closed != t_sizes_bruteforce(p):
                        return False, f"T sizes differ at A={a:#x} B={b:#x}"
                    if sum(closed) != t_total(p):
                        return False, f"T total identity fails at A={a:#x} B={b:#x}"
            return True, f"{4 ** m} (A,B) pairs"
        out.append(_timed(f"C3 counting lemma m={m}", check))
    return out


def _direct_sign_sums(m: int, facets: list[int]) -> tuple[int, np.ndarray]:
    vs = np.arange(1 << m, dtype=np.int64)
    member = np.zeros(1 << m, dtype=bool)
    for f in facets:
        member |= (vs & ~f) == 0
    elems = vs[member]
    par = np.bitwise_count((vs[:, None] & elems[None, :]).astype(np.uint64)) & 1
    sums = (1 - 2 * par.astype(np.int64)).sum(axis=1)
    return int(member.sum()), sums


def criterion_4(n_complexes: int = 1000, seed: int = 20201015) -> list[CheckResult]:
    def check():
        rng = random.Random(seed)
        for i in range(n_complexes):
            m = rng.randint(1, 10)
            facets = [rng.getrandbits(m) for _ in range(rng.randint(1, 4))]
            cx = SimplicialComplex.from_maximal(m, facets)
            size, sums = _direct_sign_sums(m, facets)
            if cx.size() != size:
                return False, f"complex #{i} {cx}: size {cx.size()} != {size}"
            if not np.array_equal(cx.sign_table(), sums):
                return False, f"complex #{i} {cx}: sign table differs"
            probe = rng.getrandbits(m)
            if cx.eval_sign(probe) != sums[probe]:
                return False, f"complex #{i} {cx}: eval_sign({probe}) differs"
        return True, f"{n_complexes} random complexes"
    return [_timed("C4 generating function oracle", check)]


def criterion_5(m_values=range(1, 5)) -> list[CheckResult]:
    out = []
    for m in m_values:
        def check(m=m):
            vecs = [RingVector(m, a, b) for a in range(1 << m) for b in range(1 << m)]
            for x in vecs:
                gx = gray(x)
                for y in vecs:
                    gy = gray(y)
                    if lee_distance(x, y) != (gx ^ gy).bit_count():
                        return False, f"isometry fails at {x}, {y}"
                    if gray(ring_add(x, y)) != gx ^ gy:
                        return False, f"linearity fails at {x}, {y}"
            return True, f"{len(vecs) ** 2} pairs"
        out.append(_timed(f"C5 Gray isometry m={m}", check))
    return out


def criterion_6(m_max: int = 8) -> list[CheckResult]:
    def l1_distance_optimal():
        for m in range(2, m_max + 1):
            for b in range(1, m):
                for a in range(m + 1):
                    n = 2 ** (a + 1) * (2**m - 2**b)
                    k, d = m + a, 2**a * (2**m - 2**b)
                    for u in range(max(a, b), min(m, a + b) + 1):
                        dist = table1_thm32(SpectrumParams(m, a, b, u))
                        got = binary_params(dist, n // 2, dist[0])
                        if (got.n, got.k, got.d) != (n, k, d):
                            return False, f"m={m} |A|={a} |B|={b}: params {got}"
                    p = BinaryParams(n, k, d)
                    if not distance_optimal_by_griesmer(p):
                        return False, f"certificate false at {p}"
                    if griesmer_sum(k, d + 1) != n + a + b:
                        return False, f"identity fails at m={m} |A|={a} |B|={b}"
        return True, f"m=2..{m_max}"

    def l2_meets_griesmer():
        for m in range(2, m_max + 1):
            a = m - 1
            dist = table4_thm36(SpectrumParams(m, a, a, a))
            n = (2**m - 2**a) ** 2
            p = binary_params(dist, n, dist[0])
            if (p.n, p.k, p.d) != (2 ** (2 * m - 1), 2 * m, 2 ** (2 * m - 2)):
                return False, f"m={m}: params {p}"
            if not meets_griesmer(p):
                return False, f"m={m}: {p} misses equality"
        return True, f"m=2..{m_max}"

    return [_timed("C6 distance optimality (L1 family)", l1_distance_optimal),
            _timed("C6 Griesmer equality (L2, A=B, |A|=m-1)", l2_meets_griesmer)]


def _serialize(dist: WeightDistribution) -> bytes:
    return json.dumps(dist.to_records(), sort_keys=True).encode()


def criterion_7(m_values=range(2, 5), workers: int | None = None) -> list[CheckResult]:
    if workers is None:
        workers = max(2, os.cpu_count() or 1)

    def totals():
        cases = 0
        for m in m_values:
            for family, a, b in single_facet_cases(m):
                L = build(family, *_complexes(m, a, b))
                msg = lee_spectrum_bruteforce(L)
                if msg.total != 4**m:
                    return False, f"{family} m={m}: total {msg.total}"
                code = distinct_code(L)
                size = len(code.codewords)
                if size & (size - 1):
                    return False, f"{family} m={m}: {size} codewords"
                if code.kernel_size != kernel_size(L) or msg[0] != code.kernel_size:
                    return False, f"{family} m={m}: kernel sizes disagree"
                if msg.divided(code.kernel_size) != code.lee_distribution():
                    return False, f"{family} m={m}: kernel division bridge fails"
                if code.lee_distribution().total != size:
                    return False, f"{family} m={m}: distinct total"
                cases += 1
        return True, f"{cases} constructions"

    def parallel():
        m = 5
        for family, a, b in [(Family.L1, 0b00011, 0b00101),
                             (Family.L2, 0b00001, 0b00110),
                             (Family.L2PLAIN, 0b00111, None)]:
            L = build(family, *_complexes(m, a, b))
            one = _serialize(lee_spectrum_bruteforce(L, workers=1))
            many = _serialize(lee_spectrum_bruteforce(L, workers=workers))
            if one != many:
                return False, f"{family}: output differs with {workers} workers"
        return True, f"workers 1 vs {workers}"

    return [_timed("C7 totals, kernel bridge, power-of-two size", totals),
            _timed("C7 parallel-degree independence", parallel)]


CRITERIA: dict[int, Callable[[], list[CheckResult]]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
}


def run_all() -> list[CheckResult]:
    results = []
    for fn in CRITERIA.values():
        results.extend(fn())
    return results
