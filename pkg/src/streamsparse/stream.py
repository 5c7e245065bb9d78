"""One-pass sparsification of an edge stream.

Each arriving unit edge is sampled with probability ``min(rho / c_e, 1)``,
where ``c_e`` is its strength in the sparsifier built so far with the
edge itself added at weight 1.  Kept edges enter the sparsifier at weight
``1 / p_e``.  Nothing about the discarded edges is retained.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import kernels
from .dense import DenseWeights
from .edgelist import format_weight
from .graph import DomainError, Graph, total_weight
from .offline import SampleDecision, sample_probability
from .rng import StreamRNG
from .strength import certificate_edge_strength, floor_log2

log = logging.getLogger(__name__)

STRENGTH_MODES = ("exact", "certificate")
RHO_GRID = 1000


@dataclass(frozen=True)
class SparsifyConfig:
    """Parameters of one streaming run.

    ``m_max`` bounds the stream length and defaults to ``n**2``.
    ``rho_override`` replaces the formula value of rho.  ``exact=False``
    switches all weights to floats (about 1e-9 relative agreement).
    """

    epsilon: Fraction | float
    n: int
    d: Fraction | float = 1
    m_max: int | None = None
    rho_override: Fraction | float | None = None
    seed: object = 0
    strength_mode: str = "exact"
    exact: bool = True

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise DomainError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if not self.d > 0:
            raise DomainError(f"d must be positive, got {self.d}")
        if self.n < 0:
            raise DomainError(f"n must be non-negative, got {self.n}")
        if self.m_max is not None and self.m_max < 1:
            raise DomainError(f"m_max must be at least 1, got {self.m_max}")
        if self.rho_override is not None and not self.rho_override > 0:
            raise DomainError(f"rho_override must be positive, got {self.rho_override}")
        if self.strength_mode not in STRENGTH_MODES:
            raise DomainError(f"strength_mode must be one of {STRENGTH_MODES}")

    @property
    def stream_bound(self) -> int:
        return self.m_max if self.m_max is not None else max(self.n * self.n, 1)


def rho_formula(n: int, m: int, d, epsilon) -> float:
    eps = float(epsilon)
    return 32 * ((4 + float(d)) * math.log(n) + math.log(m)) * (1 + eps) / eps**2


def resolve_rho(cfg: SparsifyConfig):
    """The sampling constant for ``cfg``.

    Without an override the formula value is rounded *up* to a multiple of
    1/1000 so it is an exact, compact rational.
    """
    if cfg.rho_override is not None:
        return Fraction(cfg.rho_override) if cfg.exact else float(cfg.rho_override)
    if cfg.n < 2:
        raise DomainError("the rho formula needs n >= 2")
    value = rho_formula(cfg.n, cfg.stream_bound, cfg.d, cfg.epsilon)
    if not cfg.exact:
        return value
    return Fraction(math.ceil(value * RHO_GRID), RHO_GRID)


@dataclass
class SparsifierState:
    cfg: SparsifyConfig
    rho: Fraction | float
    H: Graph
    decisions: list = field(default_factory=list)
    self_loops: int = 0
    position: int = 0
    warnings: list = field(default_factory=list)
    rng: StreamRNG = None
    dense: DenseWeights = None

    @classmethod
    def start(cls, cfg: SparsifyConfig) -> SparsifierState:
        return cls(
            cfg=cfg,
            rho=resolve_rho(cfg),
            H=Graph(cfg.n, exact=cfg.exact),
            rng=StreamRNG(cfg.seed),
            dense=DenseWeights(cfg.n, exact=cfg.exact),
        )

    @property
    def i(self) -> int:
        return len(self.decisions)

    def connectivity(self, u: int, v: int):
        """Strength of a unit edge ``uv`` in the current sparsifier plus that edge."""
        dw = self.dense
        dw.add(u, v, 1)
        try:
            if self.cfg.strength_mode == "certificate":
                return certificate_edge_strength(dw, u, v)
            return dw.value(kernels.edge_strength(dw.mat, u, v))
        finally:
            dw.remove(u, v, 1)

    def ingest(self, u: int, v: int) -> SampleDecision | None:
        n = self.cfg.n
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        edge_id = self.position
        self.position += 1
        if u == v:
            self.self_loops += 1
            log.warning("ignoring self-loop at vertex %d (arrival %d)", u, edge_id)
            return None
        c = self.connectivity(u, v)
        p = sample_probability(c, self.rho)
        kept = self.rng.bernoulli(p)
        decision = SampleDecision(edge_id, u, v, c, p, kept)
        if kept:
            self.H.add_edge(u, v, decision.weight, edge_id)
            self.dense.add(u, v, decision.weight)
        self.decisions.append(decision)
        return decision


def ingest(state: SparsifierState, u: int, v: int) -> SparsifierState:
    state.ingest(u, v)
    return state


def run_stream(cfg: SparsifyConfig, stream: Iterable[tuple[int, int]]) -> SparsifierState:
    state = SparsifierState.start(cfg)
    for u, v in stream:
        state.ingest(u, v)
    if state.position > cfg.stream_bound:
        msg = f"stream length {state.position} exceeds m_max={cfg.stream_bound}; rho was calibrated for m_max"
        state.warnings.append(msg)
        log.warning(msg)
    return state


def rational_text(x) -> str:
    return format_weight(x)


def space_report(state: SparsifierState) -> dict:
    """Edge count, total weight and a dyadic histogram of ``c_e`` over kept edges.

    Histogram key ``j`` counts kept edges with ``2**j <= c_e < 2**(j+1)``.
    """
    hist = Counter(floor_log2(d.c_e) for d in state.decisions if d.kept)
    return {
        "edges": state.H.m,
        "total_weight": total_weight(state.H),
        "rho": state.rho,
        "histogram": {str(j): hist[j] for j in sorted(hist)},
    }


def space_report_json(state: SparsifierState) -> dict:
    rep = space_report(state)
    rep["total_weight"] = rational_text(rep["total_weight"])
    rep["rho"] = rational_text(rep["rho"])
    return rep
