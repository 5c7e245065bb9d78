"""Edge strength (strong connectivity) and k-strong components.

The strength of an edge ``uv`` is the largest minimum-cut value of a
vertex-induced subgraph containing both endpoints.  It depends only on the
endpoint pair, so parallel edges share a value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, log2

import numpy as np

from . import kernels
from .dense import DenseWeights
from .graph import DomainError, Graph, RefusalError

BRUTE_LIMIT = 10


@dataclass
class StrengthNode:
    vertices: tuple
    guarantee: Fraction | float
    children: list = field(default_factory=list)

    def walk(self, depth=0):
        yield depth, self
        for child in self.children:
            yield from child.walk(depth + 1)


@dataclass
class StrengthMap:
    strengths: dict
    hierarchy: StrengthNode | None = None

    def __getitem__(self, edge_id):
        return self.strengths[edge_id]

    def __len__(self):
        return len(self.strengths)


def _components(mat, verts):
    """Connected components of the subgraph induced by ``verts`` (sorted lists)."""
    verts = list(verts)
    left = set(verts)
    out = []
    for s in verts:
        if s not in left:
            continue
        left.discard(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in np.flatnonzero(mat[x] != 0).tolist():
                if y in left:
                    left.discard(y)
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def _pair_map(g: Graph, dw: DenseWeights, pair_value) -> dict:
    out = {}
    for e in g.edges:
        a, b = min(e.u, e.v), max(e.u, e.v)
        out[e.id] = dw.value(pair_value[a, b])
    return out


def strength_exact(g: Graph) -> StrengthMap:
    """Exact strengths by recursive minimum-cut partitioning.

    Each connected piece is split along a minimum cut of value ``lam``; edges
    across that cut get ``max(lam, inherited)``, and both sides recurse with
    the larger value inherited.
    """
    dw = g.dense()
    mat = dw.mat
    pair = {}

    def split(verts, inherited):
        nodes = []
        for comp in _components(mat, verts):
            if len(comp) == 1:
                nodes.append(StrengthNode(tuple(comp), inherited))
                continue
            idx = np.array(comp)
            lam, mask = kernels.stoer_wagner(mat[np.ix_(idx, idx)])
            level = lam if lam > inherited else inherited
            side = set(idx[mask].tolist())
            for a in comp:
                for b in comp:
                    if a < b and (a in side) != (b in side) and mat[a, b] != 0:
                        pair[a, b] = level
            node = StrengthNode(tuple(comp), level)
            node.children = split(sorted(side), level) + split(sorted(set(comp) - side), level)
            nodes.append(node)
        return nodes

    zero = mat.dtype.type(0) if mat.dtype != object else 0
    top = split(range(g.n), zero)
    if len(top) == 1:
        root = top[0]
    else:
        root = StrengthNode(tuple(range(g.n)), zero, top)
    for _, node in root.walk():
        node.guarantee = dw.value(node.guarantee)
    return StrengthMap(_pair_map(g, dw, pair), root)


def strength_brute(g: Graph) -> StrengthMap:
    """Strengths straight from the definition, by enumerating vertex subsets
    and all of their cuts.  Shares no code with the Stoer-Wagner path."""
    if g.n > BRUTE_LIMIT:
        raise RefusalError(f"strength_brute is limited to n <= {BRUTE_LIMIT}, got n={g.n}")
    dw = g.dense()
    mat = dw.mat
    pairs = sorted({(min(e.u, e.v), max(e.u, e.v)) for e in g.edges})
    best = {p: 0 for p in pairs}
    for subset in range(1, 1 << g.n):
        verts = [x for x in range(g.n) if subset >> x & 1]
        inside = [p for p in pairs if subset >> p[0] & 1 and subset >> p[1] & 1]
        if not inside:
            continue
        k = len(verts)
        sub = mat[np.ix_(verts, verts)]
        masks = np.arange((1 << (k - 1)) - 1)
        sides = np.ones((len(masks), k), dtype=bool)
        sides[:, 1:] = (masks[:, None] >> np.arange(k - 1)) & 1
        crossing = (sides[:, :, None] != sides[:, None, :]).astype(sub.dtype)
        # each crossing pair is seen twice in the full matrix product
        values = (crossing * sub[None]).sum(axis=(1, 2)) // 2 if dw.exact else \
            (crossing * sub[None]).sum(axis=(1, 2)) / 2
        lam = values.min()
        for p in inside:
            if lam > best[p]:
                best[p] = lam
    return StrengthMap(_pair_map(g, dw, best))


def k_strong_components(g: Graph, k, smap: StrengthMap | None = None) -> list[list[int]]:
    """Partition into maximal k-strong induced subgraphs (singletons elsewhere)."""
    k = Fraction(k) if g.exact else float(k)
    if not k > 0:
        raise DomainError(f"k must be positive, got {k}")
    if smap is None or smap.hierarchy is None:
        smap = strength_exact(g)
    blocks = []

    def visit(node):
        if len(node.vertices) >= 2 and node.guarantee >= k:
            blocks.append(sorted(node.vertices))
        elif not node.children:
            blocks.extend([x] for x in node.vertices)
        else:
            for child in node.children:
                visit(child)

    if g.n:
        visit(smap.hierarchy)
    return sorted(blocks)


# ---------------------------------------------------------------------------
# certificate-based dyadic underestimate


def ni_certificate(mat, threshold):
    """Maximum-adjacency sparse certificate of a dense weight matrix.

    Vertices are scanned in maximum-adjacency order (ties to the lowest
    index).  When ``x`` is scanned, each edge to an unscanned ``y`` keeps
    only the part of its weight that lifts ``y``'s attachment up to
    ``threshold``.  Every cut of the result is at least
    ``min(threshold, original cut value)``, and no larger than the original.
    """
    k = mat.shape[0]
    cert = np.zeros_like(mat)
    attach = np.zeros(k, dtype=mat.dtype)
    scanned = np.zeros(k, dtype=bool)
    for _ in range(k):
        probe = np.where(scanned, -1, attach)
        x = int(np.argmax(probe))
        scanned[x] = True
        for y in np.flatnonzero((mat[x] != 0) & ~scanned).tolist():
            room = threshold - attach[y]
            if room > 0:
                c = mat[x, y] if mat[x, y] < room else room
                cert[x, y] = cert[y, x] = c
            attach[y] += mat[x, y]
    return cert


def _cut_weight(mat, idx_mask):
    return mat[np.ix_(idx_mask, ~idx_mask)].sum()


def _strong_split(mat, comp, threshold):
    """Return ``None`` if ``mat[comp]`` is threshold-strong, else a cut of value < threshold."""
    idx = np.array(comp)
    sub = mat[np.ix_(idx, idx)]
    lam, mask = kernels.stoer_wagner(ni_certificate(sub, threshold))
    if lam >= threshold:
        return None
    if not _cut_weight(sub, mask) < threshold:
        lam, mask = kernels.stoer_wagner(sub)
        if lam >= threshold:
            return None
    return set(idx[mask].tolist())


def _strong_blocks(mat, pieces, threshold):
    blocks = []
    todo = list(pieces)
    while todo:
        piece = todo.pop()
        for comp in _components(mat, piece):
            if len(comp) == 1:
                continue
            side = _strong_split(mat, comp, threshold)
            if side is None:
                blocks.append(comp)
            else:
                todo.append(sorted(side))
                todo.append(sorted(set(comp) - side))
    return blocks


def floor_log2(x) -> int:
    if isinstance(x, Fraction):
        j = x.numerator.bit_length() - x.denominator.bit_length()
        if Fraction(2) ** j > x:
            j -= 1
        return j
    return floor(log2(x))


def _scaled_threshold(dw: DenseWeights, k):
    if dw.exact:
        return ceil(Fraction(k) * dw.denom)
    return float(k)


def strength_certificate(g: Graph) -> StrengthMap:
    """Power-of-two underestimate of every edge strength.

    For ``k = 2**j`` the k-strong blocks are found by splitting pieces whose
    sparse certificate has a cut below ``k``; an edge gets the largest ``k``
    whose block holds both ends.  Result lies in ``(exact/2, exact]``.
    """
    if not g.edges:
        return StrengthMap({})
    dw = g.dense()
    mat = dw.mat
    two = Fraction(2) if g.exact else 2.0
    pair_w = {}
    for e in g.edges:
        a, b = min(e.u, e.v), max(e.u, e.v)
        pair_w[a, b] = pair_w.get((a, b), 0) + e.w
    lo = min(floor_log2(w) for w in pair_w.values())
    hi = max(floor_log2(g.degree(x)) for x in range(g.n) if g.degree(x) > 0)
    est = {}
    pieces = [list(range(g.n))]
    for j in range(lo, hi + 1):
        k = two ** j
        pieces = _strong_blocks(mat, pieces, _scaled_threshold(dw, k))
        if not pieces:
            break
        where = {x: i for i, block in enumerate(pieces) for x in block}
        for p in pair_w:
            if p[0] in where and where[p[0]] == where.get(p[1]):
                est[p] = k
    out = {}
    for e in g.edges:
        out[e.id] = est[min(e.u, e.v), max(e.u, e.v)]
    return StrengthMap(out)


def _in_strong_block(mat, u, v, threshold):
    n = mat.shape[0]
    active = np.ones(n, dtype=bool)
    while True:
        while True:
            deg = mat[:, active].sum(axis=1)
            if deg[u] < threshold or deg[v] < threshold:
                return False
            low = active & (deg < threshold)
            low[u] = low[v] = False
            if not low.any():
                break
            active &= ~low
        verts = np.flatnonzero(active).tolist()
        comp = next(c for c in _components(mat, verts) if u in c)
        if v not in comp:
            return False
        side = _strong_split(mat, comp, threshold)
        if side is None:
            return True
        if (u in side) != (v in side):
            return False
        keep = side if u in side else set(comp) - side
        active = np.zeros(n, dtype=bool)
        active[sorted(keep)] = True


def certificate_edge_strength(dw: DenseWeights, u: int, v: int):
    """Power-of-two underestimate of the strength of pair ``(u, v)`` in ``dw``."""
    mat = dw.mat
    two = Fraction(2) if dw.exact else 2.0
    deg = min(dw.value(mat[u].sum()), dw.value(mat[v].sum()))
    lo = floor_log2(dw.value(mat[u, v]))
    for j in range(floor_log2(deg), lo, -1):
        if _in_strong_block(mat, u, v, _scaled_threshold(dw, two ** j)):
            return two ** j
    return two ** lo
