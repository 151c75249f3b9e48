import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpmx import WeightedSequence, build_trie, generate_random, heavy_string, match_probability
from wpmx.oracle import naive_extensions
from wpmx.pwm import meets_threshold
from wpmx.trie import ROOT

from conftest import small_instances


def test_example_shape(example_seq):
    T = build_trie(example_seq, 4)
    assert len(T) == 27
    assert [len(l) for l in T.levels] == [1, 1, 1, 1, 1, 2, 4, 4, 4, 4, 4]
    assert T.upward(T.leaf) == "ababaaaaba"
    bottom = sorted(T.upward(u) for u in T.levels[10])
    assert bottom == ["ababaaaaba", "ababbaaaba", "bbabaaaaba", "bbabbaaaba"]


def test_example_end_len(example_seq):
    T = build_trie(example_seq, 4)
    for u in T.levels[10]:
        assert T.length[u] == 5
        assert T.level[T.end[u]] == 5
    assert sorted(T.maximal_factor(u) for u in T.levels[10]) == ["ababa", "ababb", "bbaba", "bbabb"]


def test_solid_sequence_is_a_path():
    T = build_trie(WeightedSequence.solid("abc"), 1)
    assert len(T) == 4
    assert T.upward(T.leaf) == "abc"
    assert [T.length[u] for u in T.heavy] == [0, 1, 2, 3]
    assert all(T.end[u] == ROOT for u in range(len(T)))


def test_single_uncertain_position():
    X = WeightedSequence("ab", ((("a", 0.5), ("b", 0.5)),))
    T = build_trie(X, 2)
    assert sorted(T.letter[c] for c in T.children[ROOT]) == ["a", "b"]
    T1 = build_trie(X, 1)
    assert len(T1) == 2 and T1.length[T1.leaf] == 0


def test_rejects_small_z():
    with pytest.raises(ValueError):
        build_trie(WeightedSequence.solid("a"), 0.5)


def test_empty_sequence():
    T = build_trie(WeightedSequence("ab", ()), 2)
    assert len(T) == 1 and T.leaf == ROOT


def test_dump_format(example_seq):
    lines = build_trie(example_seq, 4).dump().splitlines()
    assert lines[0] == "0 0 - -1 0 1 0 0"
    assert lines[6] == "6 5 b 4 4 0.5 0 5"
    assert len(lines) == 27


def test_ancestor_and_upward(example_seq):
    T = build_trie(example_seq, 4)
    u = T.levels[10][-1]
    assert T.ancestor(u, 0) == u
    assert T.ancestor(u, 10) == ROOT
    assert T.upward(u, 3) == T.upward(u)[:3]
    with pytest.raises(ValueError):
        T.ancestor(u, 11)
    with pytest.raises(ValueError):
        T.upward(u, 11)
    assert T.is_ancestor(T.parent[u], u) and not T.is_ancestor(u, T.parent[u])


@pytest.mark.parametrize("X, z", small_instances(400, seed=1))
def test_against_oracle(X, z):
    T = build_trie(X, z)
    H = heavy_string(X)
    strings = [T.upward(u) for u in range(len(T))]
    assert len(set(strings)) == len(strings)
    assert set(strings) == naive_extensions(X, z, H)
    for u in range(len(T)):
        i = T.position(u)
        s = strings[u]
        k = T.length[u]
        assert meets_threshold(match_probability(s[:k], X, i), z)
        if k < len(s):
            assert not meets_threshold(match_probability(s[: k + 1], X, i), z)


def check_invariants(T):
    z = T.z
    X = T.X
    for lvl in T.levels:
        assert len(lvl) <= z + 1e-9
    for u in range(1, len(T)):
        b = T.back[u]
        assert b in T.heavy
        assert T.is_ancestor(b, u)
        # pi_back is the probability of the segment between u and back(u)
        seg = T.upward(u, T.level[u] - T.level[b])
        assert abs(match_probability(seg, X, T.position(u)) - T.pi_back[u]) < 1e-9
        assert meets_threshold(T.pi_back[u], z)
        assert T.level[T.end[u]] <= T.level[u]
        assert T.is_ancestor(T.end[u], u)
    # a deeper node never ends above its ancestor's end
    for u in range(1, len(T)):
        p = T.parent[u]
        assert T.level[T.end[p]] <= T.level[T.end[u]]


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 14), st.integers(0, 10**6), st.floats(0, 1), st.sampled_from([1, 2, 3, 4, 8, 2.5]),
       st.sampled_from([4, 16, None]))
def test_invariants(n, seed, frac, z, res):
    check_invariants(build_trie(generate_random(n, "abc", seed, frac, res), z))


def test_level_bound_large():
    X = generate_random(2000, "acgt", 5, 0.6)
    T = build_trie(X, 16)
    assert max(len(l) for l in T.levels) <= 16
    assert len(T) <= 16 * X.n + 1
