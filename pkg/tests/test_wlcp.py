import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpmx import QueryStats, WeightedSequence, WlcpOracle, build_index, generate_random, weighted_prefix_table
from wpmx.oracle import naive_wlcp

from conftest import small_instances


def test_example_wpt(example_seq):
    assert weighted_prefix_table(example_seq, 4) == [5, 1, 5, 3, 3, 1, 1, 3, 1, 1]


def test_solid():
    assert weighted_prefix_table(WeightedSequence.solid("aaa"), 1) == [3, 2, 1]
    assert weighted_prefix_table(WeightedSequence.solid("abab"), 1) == [4, 0, 2, 0]


def test_reuses_index(example_seq, example_index):
    assert weighted_prefix_table(example_seq, 4, example_index)[2] == 5


def test_out_of_range(example_index):
    W = WlcpOracle(example_index)
    with pytest.raises(IndexError):
        W.wlcp(0, 1)
    with pytest.raises(IndexError):
        W.wlcp(1, 11)


def test_leaf_lists(example_index):
    W = WlcpOracle(example_index)
    I = example_index
    for i in range(1, 11):
        L = W.leaves_at[i]
        assert L == sorted(L)
        assert len(L) <= 4
        assert all(i in I.leaf_positions(x) for x in L)


@pytest.mark.parametrize("X, z", small_instances(200, seed=4))
def test_against_oracle(X, z):
    I = build_index(X, z)
    W = WlcpOracle(I)
    for i in range(1, X.n + 1):
        for j in range(1, X.n + 1):
            stats = QueryStats()
            assert W.wlcp(i, j, stats) == naive_wlcp(X, z, i, j)
            assert stats.comparisons <= len(W.leaves_at[i]) + len(W.leaves_at[j])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 14), st.integers(0, 10**6), st.floats(0, 1), st.sampled_from([1, 2, 4, 8]), st.data())
def test_symmetric_and_bounded(n, seed, frac, z, data):
    W = WlcpOracle(build_index(generate_random(n, "ab", seed, frac), z))
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(1, n))
    v = W.wlcp(i, j)
    assert v == W.wlcp(j, i)
    assert 0 <= v <= n - max(i, j) + 1
    assert v <= W.wlcp(i, i)
