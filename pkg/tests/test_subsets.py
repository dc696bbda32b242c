import pytest
from hypothesis import given, strategies as st

from simplicial_codes.subsets import (DimensionError, SubsetMask, chi,
                                      enumerate_subsets, sym_diff)

from oracles import vectors, to_mask


def S(m, *els):
    return SubsetMask.from_elements(m, els)


@st.composite
def masks(draw, m=None):
    m = m or draw(st.integers(1, 8))
    return m, [SubsetMask(m, draw(st.integers(0, (1 << m) - 1))) for _ in range(3)]


def test_chi_examples():
    A = S(3, 1, 2)
    assert chi(SubsetMask.empty(3), A) == 1
    assert chi(S(3, 1), A) == 0
    assert chi(S(3, 3), A) == 1


def test_chi_nonempty_disjoint_count_m3():
    A = S(3, 1)
    count = sum(chi(X, A) for X in enumerate_subsets(3) if X.bits)
    assert count == 3 == 2 ** (3 - 1) - 1


def test_chi_dimension_mismatch():
    with pytest.raises(DimensionError):
        chi(S(3, 1), S(4, 1))
    with pytest.raises(DimensionError):
        sym_diff(S(3, 1), S(4, 1))


def test_sym_diff_examples():
    X = S(4, 1, 2)
    assert sym_diff(X, X) == SubsetMask.empty(4)
    assert sym_diff(S(3, 1, 2), S(3, 2, 3)) == S(3, 1, 3)


@pytest.mark.parametrize("m", range(1, 5))
def test_sym_diff_is_support_of_sum(m):
    for x in vectors(m):
        for y in vectors(m):
            s = tuple((a + b) % 2 for a, b in zip(x, y))
            assert sym_diff(SubsetMask(m, to_mask(x)), SubsetMask(m, to_mask(y))).bits == to_mask(s)


def test_enumerate_subsets_order():
    assert [str(s) for s in enumerate_subsets(1)] == ["{}", "{1}"]
    assert [str(s) for s in enumerate_subsets(2)] == ["{}", "{1}", "{2}", "{1,2}"]
    assert len(list(enumerate_subsets(5))) == 32


@pytest.mark.parametrize("m", [0, 31, -1])
def test_enumerate_subsets_range(m):
    with pytest.raises(ValueError):
        list(enumerate_subsets(m))


def test_text_form_roundtrip():
    assert str(S(5, 1, 3)) == "{1,3}"
    assert str(SubsetMask.empty(2)) == "{}"
    assert SubsetMask.parse(5, "{1,3}") == S(5, 1, 3)
    assert SubsetMask.parse(5, "1,3") == S(5, 1, 3)
    assert SubsetMask.parse(5, "") == SubsetMask.empty(5)
    with pytest.raises(ValueError):
        SubsetMask.parse(3, "4")


def test_mask_must_fit():
    with pytest.raises(ValueError):
        SubsetMask(3, 8)
    assert len(S(6, 1, 4, 6)) == 3


@given(masks())
def test_chi_product_is_chi_of_union(data):
    _, (X, A, B) = data
    assert chi(X, A) * chi(X, B) == chi(X, A | B)


@given(masks())
def test_sym_diff_group_laws(data):
    m, (X, Y, Z) = data
    e = SubsetMask.empty(m)
    assert sym_diff(X, Y) == sym_diff(Y, X)
    assert sym_diff(sym_diff(X, Y), Z) == sym_diff(X, sym_diff(Y, Z))
    assert sym_diff(X, e) == X
    assert sym_diff(X, X) == e


@pytest.mark.parametrize("m", range(1, 9))
def test_not_disjoint_count(m):
    for A in enumerate_subsets(m):
        hits = sum(1 for X in enumerate_subsets(m) if chi(X, A) == 0)
        assert hits == 2**m - 2 ** (m - len(A))
