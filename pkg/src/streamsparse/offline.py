"""Offline strength-based sampling over a fully stored graph."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import DomainError, Graph
from .rng import StreamRNG
from .strength import strength_exact


@dataclass(frozen=True)
class SampleDecision:
    edge_id: int
    u: int
    v: int
    c_e: Fraction | float
    p_e: Fraction | float
    kept: bool

    @property
    def weight(self):
        """Weight the edge carries in the sparsifier when kept (``1/p_e``)."""
        return 1 / self.p_e


def sample_probability(c_e, rho):
    return rho / c_e if rho < c_e else type(rho / c_e)(1)


def sparsify_offline(g: Graph, rho, seed=0) -> tuple[Graph, list[SampleDecision]]:
    """Keep each edge with probability ``min(rho / strength, 1)`` at weight ``1/p``.

    Strengths are computed once on all of ``g``; draws are taken in
    ascending edge-id order.
    """
    if any(e.w != 1 for e in g.edges):
        raise DomainError("offline sampling expects unit weights; expand integer weights with unit_expand")
    rho = Fraction(rho) if g.exact else float(rho)
    if not rho > 0:
        raise DomainError(f"rho must be positive, got {rho}")
    smap = strength_exact(g)
    rng = StreamRNG(seed)
    h = Graph(g.n, exact=g.exact)
    decisions = []
    for e in sorted(g.edges, key=lambda e: e.id):
        c = smap[e.id]
        p = sample_probability(c, rho)
        kept = rng.bernoulli(p)
        if kept:
            h.add_edge(e.u, e.v, 1 / p, e.id)
        decisions.append(SampleDecision(e.id, e.u, e.v, c, p, kept))
    return h, decisions
