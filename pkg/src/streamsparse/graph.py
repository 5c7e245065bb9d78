"""Weighted undirected multigraphs, cuts and exact minimum cuts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from . import kernels
from .dense import DenseWeights

ENUMERATE_LIMIT = 20


class DomainError(ValueError):
    """Input outside an operation's domain."""


class RefusalError(DomainError):
    """A brute-force routine was asked to exceed its size guard."""


class Edge(NamedTuple):
    u: int
    v: int
    w: Fraction | float
    id: int


def as_weight(w, exact=True):
    return Fraction(w) if exact else float(w)


class Graph:
    """Undirected multigraph on vertices ``0..n-1``.

    Parallel edges are kept as separate entries with their own ids.  Self
    loops and non-positive weights raise :class:`DomainError`.  With
    ``exact=True`` (the default) weights are ``Fraction``; otherwise floats.
    """

    def __init__(self, n: int, edges: Iterable = (), exact: bool = True):
        if n < 0:
            raise DomainError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self.exact = exact
        self._edges: list[Edge] = []
        self._ids: set[int] = set()
        self._next_id = 0
        for item in edges:
            self.add_edge(*item)

    def add_edge(self, u: int, v: int, w=1, id: int | None = None) -> int:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        if u == v:
            raise DomainError(f"self-loop at vertex {u}")
        w = as_weight(w, self.exact)
        if not w > 0:
            raise DomainError(f"edge ({u}, {v}) has non-positive weight {w}")
        if id is None:
            id = self._next_id
        elif id in self._ids:
            raise DomainError(f"duplicate edge id {id}")
        self._ids.add(id)
        self._next_id = max(self._next_id, id + 1)
        self._edges.append(Edge(u, v, w, id))
        return id

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self._edges)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __len__(self):
        return len(self._edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def copy(self) -> Graph:
        g = Graph(self.n, exact=self.exact)
        for e in self._edges:
            g.add_edge(e.u, e.v, e.w, e.id)
        return g

    def scaled(self, factor) -> Graph:
        factor = as_weight(factor, self.exact)
        return Graph(self.n, ((e.u, e.v, e.w * factor, e.id) for e in self._edges), self.exact)

    def subgraph(self, vertices) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled to ``0..k-1``; also returns the old labels."""
        keep = sorted(set(vertices))
        pos = {x: i for i, x in enumerate(keep)}
        g = Graph(len(keep), exact=self.exact)
        for e in self._edges:
            if e.u in pos and e.v in pos:
                g.add_edge(pos[e.u], pos[e.v], e.w, e.id)
        return g, keep

    def dense(self) -> DenseWeights:
        return DenseWeights.from_graph(self)

    def degree(self, x: int):
        zero = Fraction(0) if self.exact else 0.0
        return sum((e.w for e in self._edges if x in (e.u, e.v)), zero)


@dataclass(frozen=True)
class Cut:
    """A cut, stored by the side containing vertex 0."""

    n: int
    side: frozenset

    @classmethod
    def of(cls, n: int, side: Iterable[int]) -> Cut:
        side = frozenset(side)
        if not side or len(side) >= n or any(not 0 <= x < n for x in side):
            raise DomainError(f"not a proper nonempty vertex subset of 0..{n - 1}: {sorted(side)}")
        if 0 not in side:
            side = frozenset(range(n)) - side
        return cls(n, side)

    def complement(self) -> frozenset:
        return frozenset(range(self.n)) - self.side

    def crosses(self, u: int, v: int) -> bool:
        return (u in self.side) != (v in self.side)


def _check_cut(g: Graph, c: Cut):
    if c.n != g.n or not c.side or len(c.side) >= g.n:
        raise DomainError("cut does not fit the graph")


def cut_value(g: Graph, c: Cut):
    _check_cut(g, c)
    zero = Fraction(0) if g.exact else 0.0
    return sum((e.w for e in g.edges if c.crosses(e.u, e.v)), zero)


def total_weight(g: Graph):
    zero = Fraction(0) if g.exact else 0.0
    return sum((e.w for e in g.edges), zero)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        a, b = find(e.u), find(e.v)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for x in range(g.n):
        groups.setdefault(find(x), []).append(x)
    return [groups[r] for r in sorted(groups)]


def min_cut(g: Graph) -> tuple[Cut, Fraction | float]:
    """Exact global minimum cut (Stoer-Wagner).

    A disconnected graph has value 0; the returned cut is then the component
    of vertex 0.
    """
    if g.n < 2:
        raise DomainError("minimum cut needs at least two vertices")
    comps = connected_components(g)
    if len(comps) > 1:
        return Cut.of(g.n, comps[0]), (Fraction(0) if g.exact else 0.0)
    dw = g.dense()
    value, mask = kernels.stoer_wagner(dw.mat)
    return Cut.of(g.n, np.flatnonzero(mask).tolist()), dw.value(value)


def _pair_weights(g: Graph):
    """Aggregate parallel edges: (us, vs, scaled integer or float weights, denom)."""
    dw = g.dense()
    us, vs = np.triu_indices(g.n, 1)
    ws = dw.mat[us, vs]
    nz = ws != 0
    return us[nz], vs[nz], ws[nz], dw


def _crossing_sums(us, vs, ws, sides):
    crossing = sides[:, us] != sides[:, vs]
    return crossing.astype(ws.dtype) @ ws


def cut_matrix_values(g: Graph, sides: np.ndarray) -> np.ndarray:
    """Cut values for a boolean ``(cuts, n)`` side matrix, as floats."""
    us, vs, ws, dw = _pair_weights(g)
    vals = _crossing_sums(us, vs, ws, sides)
    if dw.exact:
        return np.array([float(dw.value(x)) for x in vals]) if vals.dtype == object else vals / dw.denom
    return vals


def enumerate_cuts(g: Graph, chunk: int = 1 << 14) -> Iterator[tuple[Cut, Fraction | float]]:
    """Every canonical cut exactly once, with its value."""
    if g.n > ENUMERATE_LIMIT:
        raise RefusalError(f"enumerate_cuts is limited to n <= {ENUMERATE_LIMIT}, got n={g.n}")
    if g.n < 2:
        return
    us, vs, ws, dw = _pair_weights(g)
    count = (1 << (g.n - 1)) - 1
    bits = np.arange(g.n - 1)
    for start in range(0, count, chunk):
        masks = np.arange(start, min(start + chunk, count))
        sides = np.ones((len(masks), g.n), dtype=bool)
        sides[:, 1:] = (masks[:, None] >> bits) & 1
        vals = _crossing_sums(us, vs, ws, sides)
        for row, val in zip(sides, vals):
            yield Cut(g.n, frozenset(np.flatnonzero(row).tolist())), dw.value(val)
