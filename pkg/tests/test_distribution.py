import pytest
from hypothesis import given, strategies as st

from simplicial_codes.distribution import WeightDistribution


def test_merging_and_zero_rows():
    d = WeightDistribution([(32, 1), (32, 0), (0, 1), (20, 6), (16, 0)])
    assert dict(d) == {0: 1, 20: 6, 32: 1}
    assert d.total == 8
    assert d.nonzero_weights() == [20, 32]
    assert d.min_nonzero_weight() == 20


def test_negative_rejected():
    with pytest.raises(ValueError):
        WeightDistribution({3: -1})


def test_poly_format():
    d = WeightDistribution({0: 1, 4: 6, 8: 1})
    assert d.to_poly() == "1+6z^4+z^8"
    assert WeightDistribution({0: 1, 1: 4, 2: 6}).to_poly() == "1+4z+6z^2"
    assert WeightDistribution.from_poly("1+6z^{20}+54z^{24}") == {0: 1, 20: 6, 24: 54}
    assert WeightDistribution.from_poly("1 + z") == {0: 1, 1: 1}
    with pytest.raises(ValueError):
        WeightDistribution.from_poly("1+6y^2")


def test_records_and_division():
    d = WeightDistribution({0: 2, 4: 12, 8: 2})
    assert d.to_records()[1] == {"weight": 4, "frequency": 12}
    assert WeightDistribution.from_records(d.to_records()) == d
    assert d.divided(2) == {0: 1, 4: 6, 8: 1}
    with pytest.raises(ValueError):
        d.divided(4)


@given(st.dictionaries(st.integers(0, 10**6), st.integers(1, 10**30), min_size=1))
def test_poly_roundtrip(data):
    d = WeightDistribution(data)
    assert WeightDistribution.from_poly(d.to_poly()) == d
    assert hash(d) == hash(WeightDistribution(dict(reversed(list(data.items())))))
