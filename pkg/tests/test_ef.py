import pytest
from hypothesis import given
from hypothesis import strategies as st

from lperm.ef import ef_brute_force, ef_equiv, ef_threshold


def test_frozen():
    assert ef_equiv(3, 3, 5)
    assert ef_equiv(7, 8, 3)
    assert not ef_equiv(2, 3, 2)


def test_negative_rejected():
    with pytest.raises(ValueError):
        ef_equiv(-1, 2, 1)


@pytest.mark.parametrize("k", range(4))
def test_matches_brute_force(k):
    for m in range(9):
        for n in range(9):
            assert ef_equiv(m, n, k) == ef_brute_force(m, n, k), (m, n, k)


@given(st.integers(0, 30), st.integers(0, 30), st.integers(0, 4))
def test_threshold_closed_form(m, n, k):
    assert ef_equiv(m, n, k) == ef_threshold(m, n, k)


@given(st.integers(0, 20), st.integers(0, 20), st.integers(0, 4))
def test_symmetric_and_monotone(m, n, k):
    assert ef_equiv(m, n, k) == ef_equiv(n, m, k)
    if ef_equiv(m, n, k + 1):
        assert ef_equiv(m, n, k)
