"""Cut-approximation evaluation, deterministic per-run checks and Monte Carlo."""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .edgelist import format_weight
from .graph import (
    DomainError,
    Graph,
    RefusalError,
    connected_components,
    cut_matrix_values,
    cut_value,
    min_cut,
    total_weight,
)
from .rng import StreamRNG, derive_seed
from .stream import SparsifierState, SparsifyConfig, run_stream
from .streamkit import as_graph

EXHAUSTIVE_LIMIT = 16
SCHEMA = 1
QUANTILES = (0.5, 0.9, 0.99, 1.0)


@dataclass
class EvalReport:
    mode: str
    epsilon: float
    n: int
    edge_count: int
    total_weight: Fraction | float
    cuts_probed: int
    zero_cuts: int
    max_relative_error: float
    passed: bool
    min_cut_G: Fraction | float | None
    min_cut_H: Fraction | float | None
    handshake: bool
    ek_weight_bound: dict | None = None
    quantiles: dict = field(default_factory=dict)
    runtime: float = 0.0
    config: dict = field(default_factory=dict)

    @property
    def lower_bound(self) -> bool:
        """Sampled reports only see some cuts, so their max error is a lower bound."""
        return self.mode == "sampled"

    def to_json(self) -> dict:
        def num(x):
            return None if x is None else format_weight(x)

        return {
            "schema": SCHEMA,
            "mode": self.mode,
            "max_error_is_lower_bound": self.lower_bound,
            "config": self.config,
            "epsilon": self.epsilon,
            "n": self.n,
            "edge_count": self.edge_count,
            "total_weight": num(self.total_weight),
            "cuts_probed": self.cuts_probed,
            "zero_value_cuts_skipped": self.zero_cuts,
            "max_relative_cut_error": self.max_relative_error,
            "verdict": "pass" if self.passed else "fail",
            "min_cut_G": num(self.min_cut_G),
            "min_cut_H": num(self.min_cut_H),
            "deterministic_checks": {
                "handshake": "pass" if self.handshake else "fail",
                "ek_weight_bound": None if self.ek_weight_bound is None else {
                    format_weight(k): "pass" if ok else "fail" for k, ok in self.ek_weight_bound.items()
                },
            },
            "error_quantiles": {str(q): v for q, v in self.quantiles.items()},
            "runtime_seconds": self.runtime,
        }


def all_cut_sides(n: int) -> np.ndarray:
    """Boolean ``(2**(n-1) - 1, n)`` matrix, one canonical cut per row."""
    masks = np.arange((1 << (n - 1)) - 1)
    sides = np.ones((len(masks), n), dtype=bool)
    sides[:, 1:] = (masks[:, None] >> np.arange(n - 1)) & 1
    return sides


def singleton_sides(n: int) -> np.ndarray:
    return np.eye(n, dtype=bool)


def relative_errors(g_vals: np.ndarray, h_vals: np.ndarray) -> tuple[np.ndarray, int]:
    """``|h - g| / g`` over cuts with ``g > 0``, plus the number of skipped zero cuts."""
    live = g_vals > 0
    return np.abs(h_vals[live] - g_vals[live]) / g_vals[live], int((~live).sum())


def handshake_holds(h: Graph) -> bool:
    """Total weight equals half the sum of singleton cut values."""
    if h.n < 2:
        return True
    return total_weight(h) * 2 == sum((h.degree(v) for v in range(h.n)), 0 * total_weight(h))


def check_ek_bound(state: SparsifierState) -> dict:
    """For each recorded ``c_e`` value ``k``: kept weight with ``c_e <= k`` is at most ``n (k + k/rho)``."""
    n = state.cfg.n
    rho = state.rho
    slack = 0 if state.cfg.exact else 1e-9
    kept = sorted((d.c_e, d.weight) for d in state.decisions if d.kept)
    out = {}
    acc = 0
    pos = 0
    for k in sorted({d.c_e for d in state.decisions}):
        while pos < len(kept) and kept[pos][0] <= k:
            acc += kept[pos][1]
            pos += 1
        bound = n * (k + k / rho)
        out[k] = acc <= bound * (1 + slack)
    return out


def _report(mode, g, h, epsilon, sides, state, started, extra_cfg=None):
    if g.n != h.n:
        raise DomainError(f"vertex counts differ: G has {g.n}, H has {h.n}")
    errs, zero = relative_errors(cut_matrix_values(g, sides), cut_matrix_values(h, sides))
    worst = float(errs.max()) if errs.size else 0.0
    quant = {q: float(np.quantile(errs, q)) for q in QUANTILES} if errs.size else {q: 0.0 for q in QUANTILES}
    cfg = dict(extra_cfg or {})
    if state is not None:
        cfg.update(_config_echo(state.cfg), rho=format_weight(state.rho))
    return EvalReport(
        mode=mode,
        epsilon=float(epsilon),
        n=g.n,
        edge_count=h.m,
        total_weight=total_weight(h),
        cuts_probed=len(sides),
        zero_cuts=zero,
        max_relative_error=worst,
        passed=worst <= float(epsilon),
        min_cut_G=min_cut(g)[1] if g.n >= 2 else None,
        min_cut_H=min_cut(h)[1] if h.n >= 2 else None,
        handshake=handshake_holds(h),
        ek_weight_bound=None if state is None else check_ek_bound(state),
        quantiles=quant,
        runtime=time.perf_counter() - started,
        config=cfg,
    )


def _config_echo(cfg: SparsifyConfig) -> dict:
    return {
        "epsilon": format_weight(cfg.epsilon) if isinstance(cfg.epsilon, Fraction) else cfg.epsilon,
        "d": format_weight(cfg.d) if isinstance(cfg.d, Fraction) else cfg.d,
        "n": cfg.n,
        "m_max": cfg.stream_bound,
        "rho_override": None if cfg.rho_override is None else format_weight(cfg.rho_override),
        "seed": cfg.seed if isinstance(cfg.seed, int) else str(cfg.seed),
        "strength_mode": cfg.strength_mode,
        "exact": cfg.exact,
    }


def eval_exhaustive(g: Graph, h: Graph, epsilon, state: SparsifierState | None = None) -> EvalReport:
    """Compare every cut of ``h`` against ``g``."""
    started = time.perf_counter()
    if g.n > EXHAUSTIVE_LIMIT:
        raise RefusalError(f"exhaustive evaluation is limited to n <= {EXHAUSTIVE_LIMIT}; use eval_sampled")
    sides = all_cut_sides(g.n) if g.n >= 2 else np.zeros((0, g.n), dtype=bool)
    return _report("exhaustive", g, h, epsilon, sides, state, started)


def random_cut_sides(n: int, trials: int, seed=0) -> np.ndarray:
    """``trials`` uniformly random canonical cuts (vertex 0 always on the side)."""
    gen = StreamRNG(seed).generator
    sides = np.ones((trials, n), dtype=bool)
    for t in range(trials):
        while True:
            bits = gen.integers(0, 2, size=n - 1).astype(bool)
            if not bits.all():
                break
        sides[t, 1:] = bits
    return sides


def eval_sampled(g: Graph, h: Graph, epsilon, trials: int, seed=0,
                 state: SparsifierState | None = None) -> EvalReport:
    """Singleton cuts, the exact min cut of ``g`` and ``trials`` random cuts."""
    started = time.perf_counter()
    if trials < 1:
        raise DomainError("trials must be at least 1")
    if g.n < 2:
        raise DomainError("cut evaluation needs at least two vertices")
    cut, _ = min_cut(g)
    mc = np.zeros((1, g.n), dtype=bool)
    mc[0, sorted(cut.side)] = True
    sides = np.vstack([singleton_sides(g.n), mc, random_cut_sides(g.n, trials, seed)])
    return _report("sampled", g, h, epsilon, sides, state, started, {"trials": trials, "eval_seed": seed})


def eval_mincut(g: Graph, h: Graph) -> dict:
    """Exact min cut of ``g`` versus ``h``'s min cut re-evaluated in ``g``."""
    if g.n < 2 or len(connected_components(g)) > 1:
        raise DomainError("eval_mincut needs a connected graph with at least two vertices")
    cut_g, exact = min_cut(g)
    cut_h, _ = min_cut(h)
    via = cut_value(g, cut_h)
    return {"exact": exact, "via_sparsifier": via, "ratio": via / exact,
            "cut_G": cut_g, "cut_H": cut_h}


@dataclass
class MonteCarloResult:
    runs: int
    sides: np.ndarray
    g_values: np.ndarray
    mean: np.ndarray
    std: np.ndarray
    max_errors: np.ndarray
    epsilon: float
    ek_failures: int
    p_below_one: float

    @property
    def stderr(self) -> np.ndarray:
        return self.std / np.sqrt(self.runs)

    @property
    def failure_fraction(self) -> float:
        return float((self.max_errors > self.epsilon).mean())

    def within(self, k=3.0) -> np.ndarray:
        """Per cut: is the mean within ``k`` standard errors of the true value?

        A 1e-9 relative allowance absorbs float summation error, which matters
        for cuts whose value never varies (zero standard error).
        """
        slack = 1e-9 * np.maximum(1.0, np.abs(self.g_values))
        return np.abs(self.mean - self.g_values) <= k * self.stderr + slack


def monte_carlo(cfg: SparsifyConfig, stream, seeds: int, epsilon=None, sides=None) -> MonteCarloResult:
    """Repeat ``run_stream`` under ``seeds`` independent child seeds of ``cfg.seed``.

    Cuts default to all cuts when ``n <= 16``, otherwise the singleton cuts
    plus the minimum cut of the streamed graph.
    """
    stream = [(u, v) for u, v in stream if u != v]
    g = as_graph(cfg.n, stream)
    epsilon = float(cfg.epsilon if epsilon is None else epsilon)
    if sides is None:
        if cfg.n <= EXHAUSTIVE_LIMIT:
            sides = all_cut_sides(cfg.n)
        else:
            cut, _ = min_cut(g)
            mc = np.zeros((1, cfg.n), dtype=bool)
            mc[0, sorted(cut.side)] = True
            sides = np.vstack([singleton_sides(cfg.n), mc])
    g_vals = cut_matrix_values(g, sides)
    total = np.zeros(len(sides))
    total_sq = np.zeros(len(sides))
    max_errors = np.zeros(seeds)
    ek_failures = 0
    below = 0
    decisions = 0
    for r in range(seeds):
        state = run_stream(replace(cfg, seed=derive_seed(_base_seed(cfg.seed), r)), stream)
        h_vals = cut_matrix_values(state.H, sides)
        total += h_vals
        total_sq += h_vals**2
        errs, _ = relative_errors(g_vals, h_vals)
        max_errors[r] = errs.max() if errs.size else 0.0
        ek_failures += not all(check_ek_bound(state).values())
        below += sum(d.p_e < 1 for d in state.decisions)
        decisions += len(state.decisions)
    mean = total / seeds
    var = np.maximum(total_sq / seeds - mean**2, 0.0)
    std = np.sqrt(var * seeds / (seeds - 1)) if seeds > 1 else np.zeros_like(mean)
    return MonteCarloResult(seeds, sides, g_vals, mean, std, max_errors, epsilon, ek_failures,
                            below / decisions if decisions else 0.0)


def _base_seed(seed) -> int:
    if isinstance(seed, int):
        return seed
    raise DomainError("monte_carlo needs an integer base seed")
