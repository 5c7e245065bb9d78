"""Pure-Python (numpy) versions of the hot kernels.

These work on any numeric dtype numpy can sum and compare, including
``object`` arrays of Python ints, which is how exact weights that no longer
fit in int64 are handled.  The compiled kernels in ``_kernels.pyx`` follow
the same tie-breaking rules step for step, so both routes return identical
cuts for identical input.
"""

import numpy as np


def stoer_wagner(mat):
    """Global minimum cut of a dense symmetric weight matrix.

    Returns ``(value, mask)`` where ``mask`` marks one side of a minimum cut.
    Maximum-adjacency ties go to the lowest surviving index; a later phase
    replaces the incumbent only when strictly better.
    """
    w = np.array(mat, copy=True)
    n = w.shape[0]
    if n < 2:
        raise ValueError("minimum cut needs at least two vertices")
    rep = np.arange(n)
    alive = list(range(n))
    best = None
    best_mask = None
    neg = w.dtype.type(-1) if w.dtype != object else -1
    while len(alive) > 1:
        idx = np.array(alive)
        sub = w[np.ix_(idx, idx)]
        k = len(alive)
        keys = sub[0].copy()
        added = np.zeros(k, dtype=bool)
        added[0] = True
        prev = last = 0
        phase_value = None
        for _ in range(1, k):
            probe = keys.copy()
            probe[added] = neg
            nxt = int(np.argmax(probe))
            prev, last = last, nxt
            added[nxt] = True
            phase_value = keys[nxt]
            keys = keys + sub[nxt]
        if best is None or phase_value < best:
            best = phase_value
            best_mask = rep == alive[last]
        a, b = alive[prev], alive[last]
        w[a, :] += w[b, :]
        w[:, a] += w[:, b]
        w[a, a] = 0
        rep[rep == b] = a
        alive.remove(b)
    return best, best_mask


def _component(mat, active, src):
    reach = np.zeros(len(active), dtype=bool)
    reach[src] = True
    frontier = np.array([src])
    while frontier.size:
        nbrs = (mat[frontier] != 0).any(axis=0) & active & ~reach
        reach |= nbrs
        frontier = np.flatnonzero(nbrs)
    return reach


def edge_strength(mat, u, v):
    """Strong connectivity of the vertex pair ``(u, v)``.

    This is the largest minimum-cut value over vertex-induced subgraphs that
    contain both ``u`` and ``v``.  The search keeps a lower bound ``best``
    and repeatedly
      * peels vertices whose degree inside the current piece is <= best,
      * restricts to the connected component of ``u``,
      * splits along a minimum cut, keeping the side that holds both ends.
    It stops once ``u`` and ``v`` are separated.
    """
    n = mat.shape[0]
    best = mat[u, v]
    active = np.ones(n, dtype=bool)
    while True:
        while True:
            deg = mat[:, active].sum(axis=1)
            if deg[u] <= best or deg[v] <= best:
                return best
            low = active & (deg <= best)
            low[u] = low[v] = False
            if not low.any():
                break
            active &= ~low
        active = _component(mat, active, u)
        if not active[v]:
            return best
        idx = np.flatnonzero(active)
        value, mask = stoer_wagner(mat[np.ix_(idx, idx)])
        if value > best:
            best = value
        iu = mask[np.searchsorted(idx, u)]
        if mask[np.searchsorted(idx, v)] != iu:
            return best
        active = np.zeros(n, dtype=bool)
        active[idx[mask == iu]] = True
