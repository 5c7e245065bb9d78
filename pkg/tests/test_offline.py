import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import barbell, complete, random_graph
from streamsparse import DomainError, Graph
from streamsparse.graph import enumerate_cuts
from streamsparse.offline import sparsify_offline
from streamsparse.strength import strength_exact

SEEDS = 20_000


def test_large_rho_keeps_everything(rnd):
    for _ in range(20):
        g = random_graph(rnd, weights=(1,))
        h, decisions = sparsify_offline(g, 50, seed=3)
        assert h == g
        assert all(d.p_e == 1 and d.kept for d in decisions)


def test_formula_rho_small_graph_is_identity(rnd):
    # rho = 16 (d + 2) ln n / eps^2 at d = 1, eps = 1/2
    for _ in range(20):
        g = random_graph(rnd, 4, 7, 20, weights=(1,))
        rho = Fraction(16 * 3 * math.log(g.n) / 0.25)
        h, _ = sparsify_offline(g, rho, seed=0)
        assert h == g


def test_empty_graph():
    h, decisions = sparsify_offline(Graph(4), 2, seed=0)
    assert h.m == 0 and decisions == []


def test_rejects_weighted_input():
    with pytest.raises(DomainError, match="unit_expand"):
        sparsify_offline(Graph(2, [(0, 1, 2)]), 1)


def test_rejects_bad_rho():
    with pytest.raises(DomainError):
        sparsify_offline(complete(3), 0)


def test_deterministic():
    g = barbell()
    assert sparsify_offline(g, Fraction(3, 2), 9) == sparsify_offline(g, Fraction(3, 2), 9)


def test_decision_fields():
    h, decisions = sparsify_offline(complete(4), Fraction(3, 2), seed=1)
    assert [d.edge_id for d in decisions] == list(range(6))
    for d in decisions:
        assert d.c_e == 3 and d.p_e == Fraction(1, 2)
    for e in h.edges:
        assert e.w == 2


def test_k4_kept_count_mean():
    counts = [sparsify_offline(complete(4), Fraction(3, 2), seed=s)[0].m for s in range(SEEDS)]
    # binomial(6, 1/2): expectation 3
    assert 2.9 <= np.mean(counts) <= 3.1


def test_unbiased_edges_and_cuts():
    g = barbell()
    g.add_edge(0, 5)
    g.add_edge(2, 6)
    rho = Fraction(3, 2)
    assert any(s > rho for s in strength_exact(g).strengths.values())
    cuts = list(enumerate_cuts(g))
    sides = np.array([[x in c.side for x in range(g.n)] for c, _ in cuts])
    truth = np.array([float(v) for _, v in cuts])
    weights = np.zeros((SEEDS, g.m))
    values = np.zeros((SEEDS, len(cuts)))
    for s in range(SEEDS):
        h, _ = sparsify_offline(g, rho, seed=s)
        for e in h.edges:
            weights[s, e.id] = float(e.w)
            values[s] += float(e.w) * (sides[:, e.u] != sides[:, e.v])
    se = weights.std(axis=0, ddof=1) / math.sqrt(SEEDS)
    assert (np.abs(weights.mean(axis=0) - 1) <= 3 * np.maximum(se, 1e-12)).all()
    se = values.std(axis=0, ddof=1) / math.sqrt(SEEDS)
    assert (np.abs(values.mean(axis=0) - truth) <= 3 * np.maximum(se, 1e-12)).all()
