from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import barbell, complete, path, random_graph
from streamsparse import (
    Cut,
    DomainError,
    Graph,
    RefusalError,
    connected_components,
    cut_value,
    enumerate_cuts,
    min_cut,
    total_weight,
)


@st.composite
def graphs(draw, n_max=8):
    n = draw(st.integers(2, n_max))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    weights = st.fractions(min_value=Fraction(1, 8), max_value=4, max_denominator=8)
    edges = draw(st.lists(st.tuples(pairs, weights), max_size=16))
    return Graph(n, [(u, v, w) for (u, v), w in edges])


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(DomainError):
            Graph(3, [(1, 1)])

    @pytest.mark.parametrize("w", [0, -1, Fraction(-1, 2)])
    def test_rejects_nonpositive_weight(self, w):
        with pytest.raises(DomainError):
            Graph(3, [(0, 1, w)])

    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            Graph(3, [(0, 3)])

    def test_parallel_edges_have_distinct_ids(self):
        g = Graph(2, [(0, 1), (0, 1), (1, 0)])
        assert [e.id for e in g.edges] == [0, 1, 2]

    def test_duplicate_id(self):
        g = Graph(3)
        g.add_edge(0, 1, 1, 7)
        with pytest.raises(DomainError):
            g.add_edge(1, 2, 1, 7)
        assert g.add_edge(1, 2) == 8

    def test_float_mode(self):
        g = Graph(2, [(0, 1, Fraction(1, 4))], exact=False)
        assert isinstance(g.edges[0].w, float)


class TestCut:
    def test_canonical_form(self):
        assert Cut.of(4, {1, 2}).side == frozenset({0, 3})
        assert Cut.of(4, {1, 2}) == Cut.of(4, {0, 3})

    @pytest.mark.parametrize("side", [set(), {0, 1, 2}, {5}])
    def test_invalid(self, side):
        with pytest.raises(DomainError):
            Cut.of(3, side)


def test_cut_value_examples():
    assert cut_value(complete(3), Cut.of(3, {0})) == 2
    assert cut_value(complete(4), Cut.of(4, {0, 1})) == 4
    assert cut_value(barbell(), Cut.of(8, range(4))) == 1


def test_cut_value_wrong_graph():
    with pytest.raises(DomainError):
        cut_value(complete(4), Cut.of(3, {0}))


class TestMinCut:
    def test_k4(self):
        assert min_cut(complete(4))[1] == 3

    def test_path(self):
        assert min_cut(path(5))[1] == 1

    def test_barbell(self):
        cut, value = min_cut(barbell())
        assert value == 1
        assert cut.side == frozenset(range(4))

    def test_disconnected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        cut, value = min_cut(g)
        assert value == 0
        assert cut.side == frozenset({0, 1})

    def test_too_small(self):
        with pytest.raises(DomainError):
            min_cut(Graph(1))

    def test_deterministic(self, rnd):
        g = random_graph(rnd, 6, 9, 20)
        assert min_cut(g) == min_cut(g.copy())

    def test_matches_enumeration_corpus(self, rnd):
        for _ in range(200):
            g = random_graph(rnd, 2, 12, 30)
            brute = min(v for _, v in enumerate_cuts(g))
            cut, value = min_cut(g)
            assert value == brute
            assert cut_value(g, cut) == value


class TestEnumerate:
    def test_k3(self):
        cuts = list(enumerate_cuts(complete(3)))
        assert len(cuts) == 3
        assert sorted(v for _, v in cuts) == [2, 2, 2]

    def test_path3(self):
        got = {c.side: v for c, v in enumerate_cuts(path(3))}
        assert got == {frozenset({0}): 1, frozenset({0, 1}): 1, frozenset({0, 2}): 2}

    def test_each_cut_once(self):
        cuts = [c for c, _ in enumerate_cuts(complete(6))]
        assert len(cuts) == len(set(cuts)) == 2**5 - 1

    def test_guard(self):
        with pytest.raises(RefusalError, match="20"):
            next(enumerate_cuts(Graph(21)))

    def test_values_match_cut_value(self, rnd):
        g = random_graph(rnd, 5, 7, 15)
        for c, v in enumerate_cuts(g):
            assert v == cut_value(g, c)


def test_total_weight():
    assert total_weight(Graph(3)) == 0
    assert total_weight(complete(4)) == 6
    assert total_weight(Graph(3, [(0, 1, Fraction(1, 2)), (1, 2, Fraction(1, 3))])) == Fraction(5, 6)


def test_connected_components():
    assert connected_components(complete(4)) == [[0, 1, 2, 3]]
    g = Graph(4, [(0, 1), (1, 2), (0, 2)])
    assert connected_components(g) == [[0, 1, 2], [3]]
    assert connected_components(Graph(3)) == [[0], [1], [2]]


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_complement_symmetry(g):
    for c, v in enumerate_cuts(g):
        assert cut_value(g, Cut(g.n, c.complement())) == v


@settings(max_examples=60, deadline=None)
@given(graphs(), graphs())
def test_additive_over_union(a, b):
    n = min(a.n, b.n)
    a = Graph(n, [(e.u, e.v, e.w) for e in a.edges if max(e.u, e.v) < n])
    b = Graph(n, [(e.u, e.v, e.w) for e in b.edges if max(e.u, e.v) < n])
    both = Graph(n, [(e.u, e.v, e.w) for e in a.edges + b.edges])
    for c, v in enumerate_cuts(both):
        assert v == cut_value(a, c) + cut_value(b, c)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_handshake(g):
    assert total_weight(g) == sum(cut_value(g, Cut.of(g.n, {v})) for v in range(g.n)) / 2


@settings(max_examples=60, deadline=None)
@given(graphs(), st.fractions(min_value=Fraction(1, 5), max_value=7, max_denominator=5))
def test_scaling(g, lam):
    cut, value = min_cut(g)
    cut2, value2 = min_cut(g.scaled(lam))
    assert value2 == lam * value
    assert cut2 == cut
    for c, v in enumerate_cuts(g):
        assert cut_value(g.scaled(lam), c) == lam * v
