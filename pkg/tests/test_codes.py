import random

import pytest

from simplicial_codes.codes import (ConstructionError, DefiningSet, EnumerationCapError,
                                    Family, InconsistencyError, build, codeword,
                                    distinct_code, gray_image, kernel_size,
                                    lee_spectrum_bruteforce, lee_spectrum_charsum,
                                    make_L1, make_L2, make_L2_plain)
from simplicial_codes.ring import RingVector, lee_weight
from simplicial_codes.simplicial import SimplicialComplex
from simplicial_codes.subsets import SubsetMask

from oracles import naive_codewords, naive_spectrum


def gen(m, *els):
    return SimplicialComplex.generated_by(SubsetMask.from_elements(m, els))


def tuples(m, masks):
    return [tuple((x >> i) & 1 for i in range(m)) for x in masks]


def oracle(L):
    return naive_spectrum(L.m, tuples(L.m, L.part1), tuples(L.m, L.part2))


def single_facet_sets(m):
    full = (1 << m) - 1
    for b in range(1, full):
        for a in range(full + 1):
            d1 = SimplicialComplex.from_maximal(m, [a])
            d2 = SimplicialComplex.from_maximal(m, [b])
            yield make_L1(d1, d2)
            if 0 < a < full:
                yield make_L2(d1, d2)
    for a in range(1, full):
        yield make_L2_plain(SimplicialComplex.from_maximal(m, [a]))


# ---- construction

def test_lengths():
    m = 4
    B = gen(m, 1, 2)
    assert len(make_L1(SimplicialComplex.from_maximal(m, [0]), B)) == 2**m - 2**2
    assert len(make_L1(SimplicialComplex.full(m), B)) == 2**m * (2**m - 4)
    assert len(make_L1(gen(m, 3), B)) == 2 * (2**m - 4)
    assert len(make_L2(gen(m, 3), B)) == (2**m - 2) * (2**m - 4)
    assert len(make_L2_plain(gen(m, 1, 2))) == 2**m - 4


def test_worked_lengths():
    L = make_L2(gen(3, 1), gen(3, 2, 3))
    assert len(L) == 24
    assert len(make_L2(gen(2, 1), gen(2, 1))) == 4
    assert len(make_L2_plain(gen(3, 1, 2))) == 4
    assert len(make_L2_plain(gen(3, 1))) == 6


def test_product_order():
    L = make_L2(gen(2, 1), gen(2, 2))
    # Δ_{1}^c = [{2}, {1,2}], Δ_{2}^c = [{1}, {1,2}], t2 fastest
    assert [(x.alpha, x.beta) for x in L.elements()] == [
        (0b10, 0b01), (0b10, 0b11), (0b11, 0b01), (0b11, 0b11)]


def test_l2_plain_is_pure_f2():
    L = make_L2_plain(gen(3, 1))
    assert all(x.beta == 0 for x in L.elements())


def test_empty_defining_sets_rejected():
    m = 3
    full = SimplicialComplex.full(m)
    with pytest.raises(ConstructionError, match="Δ2"):
        make_L1(gen(m, 1), full)
    with pytest.raises(ConstructionError, match="Δ1"):
        make_L1(SimplicialComplex.from_maximal(m, []), gen(m, 1))
    with pytest.raises(ConstructionError, match="make_L2_plain"):
        make_L2(gen(m, 1), full)
    with pytest.raises(ConstructionError):
        make_L2_plain(full)


# ---- spectra vs the slow reference

@pytest.mark.parametrize("m", [1, 2, 3])
def test_bruteforce_matches_reference_all_single_facets(m):
    for L in single_facet_sets(m):
        assert lee_spectrum_bruteforce(L) == oracle(L)


def test_bruteforce_matches_reference_multi_facet():
    rng = random.Random(3)
    for _ in range(25):
        m = rng.randint(2, 3)
        d1 = SimplicialComplex.from_maximal(m, [rng.getrandbits(m) for _ in range(3)])
        d2 = SimplicialComplex.from_maximal(m, [rng.getrandbits(m) for _ in range(2)])
        for family in Family:
            try:
                L = build(family, d1, d2)
            except ConstructionError:
                continue
            assert lee_spectrum_bruteforce(L) == oracle(L)


def test_bruteforce_examples():
    L = make_L1(gen(2, 1), gen(2, 1))
    assert lee_spectrum_bruteforce(L) == {0: 2, 4: 12, 8: 2} == oracle(L)
    L = make_L2(gen(3, 1), gen(3, 2, 3))
    # frozen from the reference path
    assert lee_spectrum_bruteforce(L) == {0: 1, 20: 6, 24: 52, 32: 3, 36: 2} == oracle(L)


def test_zero_message_has_weight_zero():
    for L in single_facet_sets(3):
        assert lee_spectrum_bruteforce(L)[0] >= 1
        w = lee_spectrum_charsum(L)
        assert 0 in w


def test_codeword_reference_path():
    L = make_L1(gen(2, 1), gen(2, 1))
    a = RingVector(2, 0b11, 0b01)
    cw = codeword(L, a)
    # reference words are listed alpha-major, beta-minor
    words = naive_codewords(2, tuples(2, L.part1), tuples(2, L.part2))
    assert [(e.a, e.b) for e in cw] == list(words[0b11 * 4 + 0b01])
    assert sum(e.lee_weight() for e in cw) in lee_spectrum_bruteforce(L)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_charsum_equals_bruteforce_single_facets(m):
    for L in single_facet_sets(m):
        assert lee_spectrum_charsum(L) == lee_spectrum_bruteforce(L)


def test_charsum_equals_bruteforce_multi_facet():
    rng = random.Random(11)
    for _ in range(60):
        m = rng.randint(2, 5)
        d1 = SimplicialComplex.from_maximal(m, [rng.getrandbits(m) for _ in range(rng.randint(1, 4))])
        d2 = SimplicialComplex.from_maximal(m, [rng.getrandbits(m) for _ in range(rng.randint(1, 4))])
        for family in Family:
            try:
                L = build(family, d1, d2)
            except ConstructionError:
                continue
            assert lee_spectrum_charsum(L) == lee_spectrum_bruteforce(L)


def test_charsum_example():
    L = make_L1(gen(2, 1, 2), gen(2, 1))
    assert lee_spectrum_charsum(L) == {0: 1, 8: 13, 12: 2}


def test_charsum_rejects_mismatched_sets():
    L = make_L1(gen(3, 1), gen(3, 2))
    bare = DefiningSet(3, L.part1, L.part2)
    with pytest.raises(ConstructionError):
        lee_spectrum_charsum(bare)
    forged = DefiningSet(3, L.part1, L.part2[:-1], Family.L1, L.delta1, L.delta2)
    with pytest.raises(ConstructionError):
        lee_spectrum_charsum(forged)
    relabeled = DefiningSet(3, L.part1, L.part2, Family.L2, L.delta1, L.delta2)
    with pytest.raises(ConstructionError):
        lee_spectrum_charsum(relabeled)


def test_parallel_degree_does_not_change_result():
    L = make_L2(gen(5, 1, 2), gen(5, 2, 4))
    assert lee_spectrum_bruteforce(L, workers=1) == lee_spectrum_bruteforce(L, workers=3)
    assert list(lee_spectrum_bruteforce(L, workers=0).items()) == \
        list(lee_spectrum_bruteforce(L).items())


def test_enumeration_cap():
    L = make_L2_plain(gen(9, 1))
    with pytest.raises(EnumerationCapError, match="m <= 8"):
        lee_spectrum_bruteforce(L)
    with pytest.raises(EnumerationCapError):
        lee_spectrum_charsum(L)
    with pytest.raises(EnumerationCapError):
        distinct_code(L)


# ---- distinct codes and Gray images

@pytest.mark.parametrize("m", [2, 3, 4])
def test_single_facet_l1_size_and_kernel(m):
    for a in range(1 << m):
        for b in range(1, (1 << m) - 1):
            L = make_L1(SimplicialComplex.from_maximal(m, [a]),
                        SimplicialComplex.from_maximal(m, [b]))
            code = distinct_code(L)
            na = bin(a).count("1")
            assert len(code.codewords) == 2 ** (m + na)
            assert code.kernel_size == 2 ** (m - na) == kernel_size(L)


def test_distinct_distribution_example():
    code = distinct_code(make_L1(gen(2, 1), gen(2, 1)))
    assert code.lee_distribution() == {0: 1, 4: 6, 8: 1}


@pytest.mark.parametrize("m", [2, 3, 4])
def test_kernel_division_bridge(m):
    for L in single_facet_sets(m):
        msg = lee_spectrum_bruteforce(L)
        code = distinct_code(L)
        assert all(f % code.kernel_size == 0 for f in msg.values())
        assert msg.divided(code.kernel_size) == code.lee_distribution()
        assert msg[0] == code.kernel_size


def test_distinct_matches_reference_codewords():
    L = make_L2(gen(2, 1), gen(2, 2))
    words = naive_codewords(2, tuples(2, L.part1), tuples(2, L.part2))
    code = distinct_code(L)
    assert {tuple((e.a, e.b) for e in code.coordinates(w)) for w in code.codewords} == set(words)


@pytest.mark.parametrize("m", [2, 3])
def test_code_is_r_module(m):
    for L in single_facet_sets(m):
        code = distinct_code(L)
        n = code.n
        words = code.codewords
        for x in words:
            # u * (a + ub) = u a
            assert (x & ((1 << n) - 1)) << n in words
            for y in list(words)[:16]:
                assert x ^ y in words


def test_gray_image_worked_example():
    img = gray_image(distinct_code(make_L2(gen(3, 1, 2), gen(3, 1, 2))))
    assert img.params == (32, 6, 16)
    assert img.weight_distribution.to_poly() == "1+62z^16+z^32"
    assert 0 in img.words


@pytest.mark.parametrize("m", [2, 3])
def test_gray_image_isometry_and_linearity(m):
    for L in single_facet_sets(m):
        code = distinct_code(L)
        img = gray_image(code)
        assert img.weight_distribution == code.lee_distribution()
        assert img.n == 2 * len(L)
        assert 2**img.k == len(img.words)
        sample = list(img.words)[:12]
        assert all(x ^ y in img.words for x in sample for y in sample)


def test_gray_image_rejects_non_power_of_two():
    from simplicial_codes.codes import DistinctCode
    bogus = DistinctCode(2, frozenset({0, 1, 2}), 1)
    with pytest.raises(InconsistencyError):
        gray_image(bogus)


def test_minimum_lee_distance_is_minimum_weight():
    L = make_L2_plain(gen(3, 1))
    code = distinct_code(L)
    words = list(code.codewords)
    dmin = min(code.lee_weight(x ^ y) for x in words for y in words if x != y)
    assert dmin == code.lee_distribution().min_nonzero_weight() == 3


def test_lee_weight_of_codeword_matches_ring_vector():
    L = make_L2_plain(gen(3, 1))
    code = distinct_code(L)
    for w in list(code.codewords)[:10]:
        coords = code.coordinates(w)
        rv = RingVector.from_elements(coords)
        assert lee_weight(rv) == code.lee_weight(w)
