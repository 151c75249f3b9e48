import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpmx import MaxgapStructure, WeightedSequence, build_index, compute_covers, covers, generate_random, shortest_covers
from wpmx.covers import prefix_nodes
from wpmx.oracle import maxgap, naive_covers, naive_occurrences

from conftest import small_instances


def test_maxgap_structure_examples():
    D = MaxgapStructure(10, [2, 5, 9])
    assert D.value() == 4
    D.remove(5)
    assert D.value() == 7
    assert D.elements() == [1, 2, 9, 11]
    assert MaxgapStructure(10).value() == 10
    assert MaxgapStructure(10, range(2, 11)).value() == 1


def test_maxgap_multiset():
    D = MaxgapStructure(6, [3, 3, 5])
    assert D.value() == 2
    D.remove(3)
    assert D.value() == 2
    D.remove(3)
    assert D.value() == 4
    with pytest.raises(KeyError):
        D.remove(3)
    with pytest.raises(ValueError):
        MaxgapStructure(6, [1])


def test_from_counts():
    D = MaxgapStructure.from_counts(5, [0, 0, 1, 0, 2, 0, 0])
    assert D.value() == 2 and D.elements() == [1, 2, 4, 6]


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 30), st.data())
def test_maxgap_removals(n, data):
    elems = data.draw(st.lists(st.integers(2, max(n, 2)), max_size=40)) if n >= 2 else []
    D = MaxgapStructure(n, elems)
    live = list(elems)
    prev = D.value()
    assert prev == maxgap(sorted(set([1, n + 1] + live)))
    for x in data.draw(st.permutations(elems)):
        D.remove(x)
        live.remove(x)
        assert D.value() >= prev
        prev = D.value()
        assert prev == maxgap(sorted(set([1, n + 1] + live)))


def test_example(example_seq, example_index):
    report = compute_covers(example_index)
    assert [example_index.string(e.node)[: e.max_len] for e in report.entries] == ["aba"]
    assert [(e.min_len, e.max_len) for e in report.entries] == [(3, 3)]
    assert report.materialize(example_index) == ["aba"]
    assert shortest_covers(report, example_index) == ["aba"]
    assert report.size() == 1 and report.expansion_chars() == 3
    assert covers(example_index) == ["aba"]


def test_solid():
    assert covers(build_index(WeightedSequence.solid("aa"), 1)) == ["a", "aa"]
    assert covers(build_index(WeightedSequence.solid("ab"), 1)) == ["ab"]
    assert covers(build_index(WeightedSequence.solid("abaababaab"), 1), shortest=True) == ["abaab"]


def test_no_solid_prefix():
    X = WeightedSequence("ab", ((("a", 0.5), ("b", 0.5)), (("a", 1.0),)))
    assert covers(build_index(X, 1)) == []


def test_prefix_nodes(example_index):
    I = example_index
    mark = prefix_nodes(I)
    for x in range(len(I)):
        assert mark[x] == (1 in I.ol[I.lo[x]: I.hi[x]].tolist())


@pytest.mark.parametrize("X, z", small_instances(400, seed=5))
def test_against_oracle(X, z):
    I = build_index(X, z)
    report = compute_covers(I)
    expect = naive_covers(X, z)
    assert report.materialize(I) == expect
    shortest = sorted(c for c in expect if len(c) == len(expect[0])) if expect else []
    assert shortest_covers(report, I) == shortest
    assert report.inserted.max(initial=0) <= 1
    assert report.removed.max(initial=0) <= 1
    for c in expect:
        occ = naive_occurrences(c, X, z)
        assert occ[0] == 1 and maxgap(occ + [X.n + 1]) <= len(c)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60), st.integers(0, 10**6), st.floats(0, 1), st.sampled_from([1, 2, 4, 8, 16]))
def test_entries_are_well_formed(n, seed, frac, z):
    I = build_index(generate_random(n, "ab", seed, frac), z)
    report = compute_covers(I)
    for e in report.entries:
        dv = I.depth[I.parent[e.node]]
        assert dv < e.min_len <= e.max_len == I.depth[e.node]
    assert report.inserted.max(initial=0) <= 1
    assert report.removed.max(initial=0) <= 1
