"""Edge-stream generators, arrival orders and unit expansion."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .graph import DomainError, Graph, connected_components
from .rng import StreamRNG, derive_seed
from .strength import strength_exact

FAMILIES = ("gnp", "complete", "path", "barbell", "planted_cut", "lowerbound_bipartite")
ORDERS = ("as_generated", "uniform_shuffle", "strength_ascending", "bridges_last")


@dataclass(frozen=True)
class StreamSpec:
    family: str
    params: dict = field(default_factory=dict)
    order: str = "as_generated"
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.order not in ORDERS:
            raise DomainError(f"unknown order {self.order!r}; choose from {ORDERS}")

    @property
    def n(self) -> int:
        if self.family == "barbell":
            return 2 * self.params.get("block", 4)
        return self.params["n"]


def degree_ladder(n: int, epsilon) -> list[int]:
    """Distinct integer degrees ``floor(r**i)`` for ``r = (1+eps)/(1-eps)``, capped at ``n // 2``."""
    eps = float(epsilon)
    if not 0 < eps < 1:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    ratio = (1 + eps) / (1 - eps)
    cap = n // 2
    if cap < 1:
        raise DomainError("the bipartite family needs n >= 2")
    ladder = []
    i = 0
    while True:
        d = math.floor(ratio**i)
        if d >= cap:
            break
        if not ladder or d != ladder[-1]:
            ladder.append(d)
        i += 1
    ladder.append(cap)
    return ladder


def _need(params, key, family):
    if key not in params:
        raise DomainError(f"family {family!r} needs parameter {key!r}")
    return params[key]


def _gnp(n, p, rng):
    if not 0 <= p <= 1:
        raise DomainError(f"edge probability must lie in [0, 1], got {p}")
    return [(u, v) for u, v in combinations(range(n), 2) if rng.bernoulli(p)]


def _complete(vertices):
    return list(combinations(vertices, 2))


def _planted_cut(params, rng):
    n = _need(params, "n", "planted_cut")
    left = params.get("left", n // 2)
    cut = _need(params, "cut", "planted_cut")
    p_in = params.get("p_in", 1)
    if not 1 <= left < n:
        raise DomainError("planted_cut needs two nonempty blocks")
    cross = [(u, v) for u in range(left) for v in range(left, n)]
    if not 0 <= cut <= len(cross):
        raise DomainError(f"planted cut size {cut} outside 0..{len(cross)}")
    inside = [e for e in _complete(range(left)) + _complete(range(left, n))
              if p_in >= 1 or rng.bernoulli(p_in)]
    picks = rng.generator.choice(len(cross), size=cut, replace=False) if cut else []
    rng.draws += cut
    return inside + [cross[i] for i in sorted(picks)]


def _lowerbound_bipartite(params, rng):
    n = _need(params, "n", "lowerbound_bipartite")
    if n < 2 or n % 2:
        raise DomainError("the bipartite family needs an even n >= 2")
    half = n // 2
    degrees = params.get("degrees")
    if degrees is None:
        ladder = degree_ladder(n, _need(params, "epsilon", "lowerbound_bipartite"))
        degrees = [ladder[int(rng.generator.integers(len(ladder)))] for _ in range(half)]
    degrees = list(degrees)
    if len(degrees) != half or any(not 0 <= d <= half for d in degrees):
        raise DomainError(f"infeasible degree assignment {degrees} for {half} + {half} vertices")
    load = [0] * half
    edges = []
    for x, d in enumerate(degrees):
        # least-loaded right vertices first keeps right degrees balanced
        targets = sorted(range(half), key=lambda y: (load[y], y))[:d]
        for y in sorted(targets):
            load[y] += 1
            edges.append((x, half + y))
    return edges


def _raw(spec: StreamSpec):
    p = spec.params
    rng = StreamRNG(derive_seed(spec.seed, 0))
    if spec.family == "gnp":
        return _gnp(_need(p, "n", "gnp"), _need(p, "p", "gnp"), rng)
    if spec.family == "complete":
        return _complete(range(_need(p, "n", "complete")))
    if spec.family == "path":
        return [(i, i + 1) for i in range(_need(p, "n", "path") - 1)]
    if spec.family == "barbell":
        b = p.get("block", 4)
        if b < 2:
            raise DomainError("barbell blocks need at least two vertices")
        return _complete(range(b)) + [(b - 1, b)] + _complete(range(b, 2 * b))
    if spec.family == "planted_cut":
        return _planted_cut(p, rng)
    return _lowerbound_bipartite(p, rng)


def generate(spec: StreamSpec) -> list[tuple[int, int]]:
    edges = _raw(spec)
    if spec.order == "as_generated":
        return edges
    return reorder(edges, spec.order, derive_seed(spec.seed, 1), n=spec.n)


def as_graph(n: int, stream) -> Graph:
    return Graph(n, ((u, v, 1, i) for i, (u, v) in enumerate(stream)))


def _bridges(n, stream) -> set[int]:
    """Positions of edges whose removal separates their endpoints."""
    out = set()
    for i, (u, v) in enumerate(stream):
        rest = as_graph(n, [e for j, e in enumerate(stream) if j != i])
        if not any(u in c and v in c for c in connected_components(rest)):
            out.add(i)
    return out


def reorder(stream, order: str, seed=0, n: int | None = None) -> list[tuple[int, int]]:
    """Permute ``stream``; every policy is deterministic given ``seed``."""
    stream = list(stream)
    if n is None:
        n = 1 + max((max(e) for e in stream), default=-1)
    if order == "as_generated":
        return stream
    if order == "uniform_shuffle":
        perm = StreamRNG(seed).generator.permutation(len(stream))
        return [stream[i] for i in perm]
    if order == "strength_ascending":
        smap = strength_exact(as_graph(n, stream))
        return [stream[i] for i in sorted(range(len(stream)), key=lambda i: (smap[i], i))]
    if order == "bridges_last":
        bridges = _bridges(n, stream)
        return [e for i, e in enumerate(stream) if i not in bridges] + \
            [e for i, e in enumerate(stream) if i in bridges]
    raise DomainError(f"unknown order {order!r}; choose from {ORDERS}")


def unit_expand(g: Graph) -> list[tuple[int, int]]:
    """Each edge of integer weight ``w`` becomes ``w`` parallel unit arrivals."""
    out = []
    for e in sorted(g.edges, key=lambda e: e.id):
        if e.w != int(e.w):
            raise DomainError(f"edge {e.id} has non-integer weight {e.w}")
        out.extend([(e.u, e.v)] * int(e.w))
    return out
