# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled min-cut and edge-strength kernels for int64 and float64 matrices.

Mirrors ``_pykernels`` exactly, including tie-breaking.
"""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cnp.import_array()

ctypedef fused weight_t:
    cnp.int64_t
    double


cdef weight_t _sw(weight_t* w, Py_ssize_t n, Py_ssize_t* rep,
                  Py_ssize_t* alive, weight_t* keys, char* added,
                  char* out_mask) noexcept nogil:
    # w is n*n row-major and is destroyed; out_mask receives the best side
    cdef Py_ssize_t k = n, i, j, step, nxt, prev, last, a, b, best_rep
    cdef weight_t best = 0, phase_value = 0, top
    cdef bint have_best = False
    for i in range(n):
        rep[i] = i
        alive[i] = i
    while k > 1:
        for i in range(k):
            keys[i] = w[alive[0] * n + alive[i]]
            added[i] = 0
        added[0] = 1
        prev = 0
        last = 0
        for step in range(1, k):
            nxt = -1
            for i in range(k):
                if not added[i] and (nxt < 0 or keys[i] > top):
                    nxt = i
                    top = keys[i]
            prev = last
            last = nxt
            added[nxt] = 1
            phase_value = keys[nxt]
            for i in range(k):
                keys[i] = keys[i] + w[alive[nxt] * n + alive[i]]
        if not have_best or phase_value < best:
            have_best = True
            best = phase_value
            best_rep = alive[last]
            for i in range(n):
                out_mask[i] = rep[i] == best_rep
        a = alive[prev]
        b = alive[last]
        for j in range(n):
            w[a * n + j] += w[b * n + j]
        for j in range(n):
            w[j * n + a] += w[j * n + b]
        w[a * n + a] = 0
        for i in range(n):
            if rep[i] == b:
                rep[i] = a
        for i in range(last, k - 1):
            alive[i] = alive[i + 1]
        k -= 1
    return best


def stoer_wagner(weight_t[:, ::1] mat):
    cdef Py_ssize_t n = mat.shape[0]
    if n < 2:
        raise ValueError("minimum cut needs at least two vertices")
    cdef weight_t* w = <weight_t*> malloc(n * n * sizeof(weight_t))
    cdef weight_t* keys = <weight_t*> malloc(n * sizeof(weight_t))
    cdef Py_ssize_t* rep = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* alive = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef char* added = <char*> malloc(n)
    mask = np.zeros(n, dtype=np.bool_)
    cdef char[::1] mview = mask.view(np.int8)
    cdef weight_t value
    try:
        memcpy(w, &mat[0, 0], n * n * sizeof(weight_t))
        value = _sw(w, n, rep, alive, keys, added, &mview[0])
    finally:
        free(w)
        free(keys)
        free(rep)
        free(alive)
        free(added)
    return value, mask


def edge_strength(weight_t[:, ::1] mat, Py_ssize_t u, Py_ssize_t v):
    cdef Py_ssize_t n = mat.shape[0], i, j, k, head, tail, x, cnt
    cdef weight_t best = mat[u, v], value
    cdef weight_t* deg = <weight_t*> malloc(n * sizeof(weight_t))
    cdef weight_t* sub = <weight_t*> malloc(n * n * sizeof(weight_t))
    cdef weight_t* keys = <weight_t*> malloc(n * sizeof(weight_t))
    cdef Py_ssize_t* idx = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* rep = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* alive = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* queue = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef char* active = <char*> malloc(n)
    cdef char* reach = <char*> malloc(n)
    cdef char* mask = <char*> malloc(n)
    cdef char* added = <char*> malloc(n)
    cdef bint peeled, iu
    try:
        with nogil:
            for i in range(n):
                active[i] = 1
            while True:
                while True:
                    for i in range(n):
                        deg[i] = 0
                        if active[i]:
                            for j in range(n):
                                if active[j]:
                                    deg[i] = deg[i] + mat[i, j]
                    if deg[u] <= best or deg[v] <= best:
                        break
                    peeled = False
                    for i in range(n):
                        if active[i] and i != u and i != v and deg[i] <= best:
                            active[i] = 0
                            peeled = True
                    if not peeled:
                        break
                if deg[u] <= best or deg[v] <= best:
                    break
                for i in range(n):
                    reach[i] = 0
                reach[u] = 1
                queue[0] = u
                head = 0
                tail = 1
                while head < tail:
                    x = queue[head]
                    head += 1
                    for j in range(n):
                        if active[j] and not reach[j] and mat[x, j] != 0:
                            reach[j] = 1
                            queue[tail] = j
                            tail += 1
                for i in range(n):
                    active[i] = reach[i]
                if not active[v]:
                    break
                k = 0
                for i in range(n):
                    if active[i]:
                        idx[k] = i
                        k += 1
                for i in range(k):
                    for j in range(k):
                        sub[i * k + j] = mat[idx[i], idx[j]]
                value = _sw(sub, k, rep, alive, keys, added, mask)
                if value > best:
                    best = value
                iu = 0
                cnt = 0
                for i in range(k):
                    if idx[i] == u:
                        iu = mask[i]
                    if idx[i] == v:
                        cnt = mask[i]
                if cnt != iu:
                    break
                for i in range(k):
                    active[idx[i]] = mask[i] == iu
    finally:
        free(deg)
        free(sub)
        free(keys)
        free(idx)
        free(rep)
        free(alive)
        free(queue)
        free(active)
        free(reach)
        free(mask)
        free(added)
    return best
