import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oneplanar.errors import (
    InvalidParameter,
    NoNMatching,
    NotConnected,
    ParityMismatch,
    ResourceLimit,
    TooFewVertices,
)
from oneplanar.graph import Graph, is_matching
from oneplanar.matching import (
    count_perfect_matchings,
    criticality_bound,
    criticality_upper_bound,
    dean_certificate,
    enumerate_n_matchings,
    has_perfect_matching,
    is_k_factor_critical,
    is_n_extendable,
    maximum_matching,
)
from oracles import (
    all_matchings,
    brute_matching_number,
    brute_n_extendable,
    brute_pm_count,
    cocktail_party,
    complete,
    cycle,
    petersen,
    random_connected_graph,
    wheel,
)

STAR = Graph(4, ((0, 1), (0, 2), (0, 3)))


@pytest.mark.parametrize(
    "g, size", [(cycle(5), 2), (complete(4), 2), (petersen(), 5)], ids=["C5", "K4", "petersen"]
)
def test_maximum_matching_examples(g, size):
    m = maximum_matching(g)
    assert len(m) == size and is_matching(g, m)


def test_has_perfect_matching_examples():
    assert has_perfect_matching(complete(4))
    assert not has_perfect_matching(cycle(5))
    assert not has_perfect_matching(STAR)


@pytest.mark.parametrize("g, count", [(complete(4), 3), (cycle(6), 2), (complete(6), 15)])
def test_count_examples(g, count):
    assert count_perfect_matchings(g) == count


def test_count_budget():
    with pytest.raises(ResourceLimit):
        count_perfect_matchings(complete(12), max_nodes=10)


def test_count_cocktail_party():
    # frozen from the exhaustive oracle
    assert count_perfect_matchings(cocktail_party(4)) == 60


@pytest.mark.parametrize("g, n, count", [(cycle(4), 1, 4), (cycle(4), 2, 2), (complete(4), 2, 3)])
def test_enumerate_examples(g, n, count):
    ms = list(enumerate_n_matchings(g, n))
    assert len(ms) == count
    assert ms == sorted(ms)


def test_enumerate_rejects_negative():
    with pytest.raises(InvalidParameter):
        list(enumerate_n_matchings(cycle(4), -1))


def test_extendable_examples():
    assert is_n_extendable(complete(4), 1).extendable
    v = is_n_extendable(cycle(8), 2)
    assert not v.extendable
    g = cycle(8)
    assert [g.edges[i] for i in v.witness] == [(0, 1), (3, 4)]
    assert not is_n_extendable(cocktail_party(4), 3).extendable
    assert is_n_extendable(cocktail_party(4), 2).extendable


def test_extendable_preconditions():
    with pytest.raises(NotConnected):
        is_n_extendable(Graph(4, ((0, 1), (2, 3))), 1)
    with pytest.raises(TooFewVertices):
        is_n_extendable(complete(4), 2)
    # perfect matching exists, but no 3-matching among 8 vertices of K_{2,6}
    k26 = Graph(8, tuple((a, b) for a in (0, 1) for b in range(2, 8)))
    with pytest.raises(NoNMatching):
        is_n_extendable(k26, 3)
    with pytest.raises(InvalidParameter):
        is_n_extendable(complete(4), -1)


def test_parallel_sweep_reconciles_to_first_witness():
    g = cocktail_party(4)
    assert is_n_extendable(g, 3, jobs=3).witness == is_n_extendable(g, 3).witness
    g = cycle(10)
    assert is_n_extendable(g, 2, jobs=2).witness == is_n_extendable(g, 2).witness


def test_critical_examples():
    assert is_k_factor_critical(cycle(5), 1).critical
    assert is_k_factor_critical(complete(5), 3).critical
    v = is_k_factor_critical(cycle(6), 2)
    assert not v.critical and tuple(v.witness) == (0, 2)
    assert is_k_factor_critical(cocktail_party(4), 4).critical


def test_critical_preconditions():
    with pytest.raises(ParityMismatch):
        is_k_factor_critical(cycle(6), 1)
    with pytest.raises(InvalidParameter):
        is_k_factor_critical(cycle(6), 6)
    with pytest.raises(InvalidParameter):
        is_k_factor_critical(cycle(6), -2)


def test_dean_examples():
    c = dean_certificate(cocktail_party(4), 3)
    assert c is not None and c.t == 3 and len(c.matching) == 3
    assert dean_certificate(complete(4), 1) is None
    w = dean_certificate(wheel(6), 5)
    assert w is not None and w.vertex == 0 and w.t == 1


def test_criticality_bound_examples():
    assert criticality_bound(7, 9, degrees_even=False) == 5
    assert criticality_bound(6, 10, degrees_even=True) == 4
    assert criticality_upper_bound(complete(4)) == 2


graphs = st.builds(
    lambda seed, n, p: random_connected_graph(random.Random(seed), n, p),
    st.integers(0, 10**6),
    st.integers(2, 10),
    st.floats(0.1, 1.0),
)


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_matching_oracles(g):
    assert len(maximum_matching(g)) == brute_matching_number(g)
    count = count_perfect_matchings(g)
    assert count == brute_pm_count(g)
    assert (count > 0) == has_perfect_matching(g)


@settings(max_examples=40, deadline=None)
@given(graphs, st.integers(0, 3))
def test_enumeration_matches_oracle(g, n):
    ours = list(enumerate_n_matchings(g, n))
    assert ours == sorted(m for m in all_matchings(g) if len(m) == n)


@settings(max_examples=60, deadline=None)
@given(graphs, st.integers(1, 3))
def test_extendability_matches_oracle(g, n):
    if g.n < 2 * n + 2 or g.n % 2 or brute_matching_number(g) < n:
        return
    v = is_n_extendable(g, n)
    expected, witness = brute_n_extendable(g, n)
    assert v.extendable == expected
    assert v.witness == witness
    if v.certificate is not None:
        assert not v.extendable


@settings(max_examples=40, deadline=None)
@given(graphs, st.data())
def test_critical_above_bound_is_false(g, data):
    bound = criticality_upper_bound(g)
    ks = [k for k in range(bound + 1, g.n) if (g.n + k) % 2 == 0]
    if not ks or g.min_degree() == 0:
        return
    k = data.draw(st.sampled_from(ks))
    assert not is_k_factor_critical(g, k).critical
