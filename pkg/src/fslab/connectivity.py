"""Connectivity kernels on CSR adjacency (numba).

Every routine takes an undirected graph as ``(indptr, indices)`` with both
directions of each edge present.  Vertex connectivity is computed by unit
capacity max-flow on the vertex-split digraph (``in(v) -> out(v)`` with
capacity 1, ``out(u) -> in(w)`` for every edge), minimized over the
source/target pairs of Esfahanian and Hakimi: a minimum-degree vertex
``v`` against each of its non-neighbors, then each non-adjacent pair of
neighbors of ``v``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_BIG = 1 << 30


@njit(cache=True)
def _split_network(indptr, indices):
    n = indptr.shape[0] - 1
    m2 = indices.shape[0]
    src = np.empty(m2, np.int64)
    for v in range(n):
        for j in range(indptr[v], indptr[v + 1]):
            src[j] = v
    # mirror[j] = index of the entry w -> u for the entry j = u -> w
    mirror = np.empty(m2, np.int64)
    for v in range(n):
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            for i in range(indptr[w], indptr[w + 1]):
                if indices[i] == v:
                    mirror[j] = i
                    break
    narcs = 2 * (n + m2)
    head = np.empty(narcs, np.int64)
    # vertex arcs carry 1, edge arcs are uncapacitated (n suffices) so that
    # residual min cuts consist of vertex arcs only
    cap = np.zeros(narcs, np.int32)
    for v in range(n):
        head[2 * v] = 2 * v + 1
        head[2 * v + 1] = 2 * v
        cap[2 * v] = 1
    for j in range(m2):
        head[2 * (n + j)] = 2 * indices[j]
        head[2 * (n + j) + 1] = 2 * src[j] + 1
        cap[2 * (n + j)] = n
    node_ptr = np.zeros(2 * n + 1, np.int64)
    for v in range(n):
        d = indptr[v + 1] - indptr[v] + 1
        node_ptr[2 * v + 1] = node_ptr[2 * v] + d
        node_ptr[2 * v + 2] = node_ptr[2 * v + 1] + d
    node_arcs = np.empty(node_ptr[2 * n], np.int64)
    for v in range(n):
        p = node_ptr[2 * v]
        node_arcs[p] = 2 * v
        q = node_ptr[2 * v + 1]
        node_arcs[q] = 2 * v + 1
        k = 1
        for j in range(indptr[v], indptr[v + 1]):
            node_arcs[p + k] = 2 * (n + mirror[j]) + 1
            node_arcs[q + k] = 2 * (n + j)
            k += 1
    return node_ptr, node_arcs, head, cap


@njit(cache=True)
def _augment(node_ptr, node_arcs, head, res, source, sink, seen, stamp, parent, queue):
    """One BFS augmenting path of value 1; returns False if none exists."""
    seen[source] = stamp
    queue[0] = source
    lo, hi = 0, 1
    while lo < hi:
        x = queue[lo]
        lo += 1
        for p in range(node_ptr[x], node_ptr[x + 1]):
            a = node_arcs[p]
            if res[a] <= 0:
                continue
            y = head[a]
            if seen[y] == stamp:
                continue
            seen[y] = stamp
            parent[y] = a
            if y == sink:
                while y != source:
                    a = parent[y]
                    res[a] -= 1
                    res[a ^ 1] += 1
                    y = head[a ^ 1]
                return True
            queue[hi] = y
            hi += 1
    return False


@njit(cache=True)
def _local(node_ptr, node_arcs, head, cap, res, s, t, limit, seen, stamp, parent, queue):
    """Internally disjoint s-t paths, counted up to ``limit``; resets ``res``."""
    source = 2 * s + 1
    sink = 2 * t
    flow = 0
    while flow < limit:
        stamp[0] += 1
        if not _augment(node_ptr, node_arcs, head, res, source, sink, seen, stamp[0], parent, queue):
            break
        flow += 1
    res[:] = cap
    return flow


@njit(cache=True)
def _adjacent(indptr, indices, u, w):
    for j in range(indptr[u], indptr[u + 1]):
        if indices[j] == w:
            return True
    return False


@njit(cache=True)
def _eh(indptr, indices, cutoff, stop_below):
    """Return ``(k, a, b)``; ``(a, b)`` is the pair that realised ``k`` or -1."""
    n = indptr.shape[0] - 1
    if n <= 1:
        return 0, -1, -1
    node_ptr, node_arcs, head, cap = _split_network(indptr, indices)
    res = cap.copy()
    seen = np.zeros(2 * n, np.int64)
    stamp = np.zeros(1, np.int64)
    parent = np.empty(2 * n, np.int64)
    queue = np.empty(2 * n, np.int64)
    v = 0
    for u in range(n):
        if indptr[u + 1] - indptr[u] < indptr[v + 1] - indptr[v]:
            v = u
    k = min(indptr[v + 1] - indptr[v], cutoff)
    best_a, best_b = -1, -1
    if k < stop_below or k == 0:
        return k, best_a, best_b
    is_nb = np.zeros(n, np.bool_)
    for j in range(indptr[v], indptr[v + 1]):
        is_nb[indices[j]] = True
    for w in range(n):
        if w == v or is_nb[w]:
            continue
        f = _local(node_ptr, node_arcs, head, cap, res, v, w, k, seen, stamp, parent, queue)
        if f < k:
            k = f
            best_a, best_b = v, w
            if k < stop_below or k == 0:
                return k, best_a, best_b
    lo, hi = indptr[v], indptr[v + 1]
    for i in range(lo, hi):
        x = indices[i]
        for j in range(i + 1, hi):
            y = indices[j]
            if _adjacent(indptr, indices, x, y):
                continue
            f = _local(node_ptr, node_arcs, head, cap, res, x, y, k, seen, stamp, parent, queue)
            if f < k:
                k = f
                best_a, best_b = x, y
                if k < stop_below or k == 0:
                    return k, best_a, best_b
    return k, best_a, best_b


@njit(cache=True)
def _cut_between(indptr, indices, s, t):
    """Vertices of a minimum s-t separator (s, t non-adjacent)."""
    n = indptr.shape[0] - 1
    node_ptr, node_arcs, head, cap = _split_network(indptr, indices)
    res = cap.copy()
    seen = np.zeros(2 * n, np.int64)
    parent = np.empty(2 * n, np.int64)
    queue = np.empty(2 * n, np.int64)
    stamp = 0
    while True:
        stamp += 1
        if not _augment(node_ptr, node_arcs, head, res, 2 * s + 1, 2 * t, seen, stamp, parent, queue):
            break
    # seen == stamp now marks the residual reach of the failed search
    cut = np.zeros(n, np.bool_)
    for x in range(n):
        if x != s and seen[2 * x] == stamp and seen[2 * x + 1] != stamp:
            cut[x] = True
    return cut


@njit(cache=True)
def articulation_points(indptr, indices):
    """Boolean mask of cut vertices (iterative Tarjan low-link)."""
    n = indptr.shape[0] - 1
    disc = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    parent = np.full(n, -1, np.int64)
    it = np.zeros(n, np.int64)
    stack = np.empty(n, np.int64)
    ap = np.zeros(n, np.bool_)
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = timer
        low[root] = timer
        timer += 1
        it[root] = indptr[root]
        stack[0] = root
        top = 1
        children = 0
        while top > 0:
            u = stack[top - 1]
            if it[u] < indptr[u + 1]:
                w = indices[it[u]]
                it[u] += 1
                if disc[w] == -1:
                    parent[w] = u
                    disc[w] = timer
                    low[w] = timer
                    timer += 1
                    it[w] = indptr[w]
                    stack[top] = w
                    top += 1
                    if u == root:
                        children += 1
                elif w != parent[u] and disc[w] < low[u]:
                    low[u] = disc[w]
            else:
                top -= 1
                p = parent[u]
                if p != -1:
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if p != root and low[u] >= disc[p]:
                        ap[p] = True
        if children > 1:
            ap[root] = True
    return ap


@njit(cache=True)
def component_labels(indptr, indices, alive):
    """Component id per vertex (-1 where ``alive`` is False).

    Ids are assigned in increasing order of each component's smallest vertex.
    """
    n = indptr.shape[0] - 1
    label = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    c = 0
    for root in range(n):
        if not alive[root] or label[root] != -1:
            continue
        label[root] = c
        queue[0] = root
        lo, hi = 0, 1
        while lo < hi:
            u = queue[lo]
            lo += 1
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if alive[w] and label[w] == -1:
                    label[w] = c
                    queue[hi] = w
                    hi += 1
        c += 1
    return label


def _as_csr(indptr, indices):
    return np.ascontiguousarray(indptr, dtype=np.int64), np.ascontiguousarray(indices, dtype=np.int64)


def vertex_connectivity(indptr, indices, cutoff: int | None = None) -> int:
    """Exact vertex connectivity (``n - 1`` for complete graphs).

    With ``cutoff`` the search stops as soon as the answer is known to be
    ``>= cutoff`` and returns ``min(kappa, cutoff)``.
    """
    indptr, indices = _as_csr(indptr, indices)
    k, _, _ = _eh(indptr, indices, _BIG if cutoff is None else cutoff, 0)
    return int(k)


def is_k_connected(indptr, indices, k: int) -> bool:
    """``kappa >= k`` and at least ``k + 1`` vertices."""
    indptr, indices = _as_csr(indptr, indices)
    n = len(indptr) - 1
    if n < k + 1:
        return False
    if k <= 0:
        return True
    if k == 1:
        return is_connected(indptr, indices)
    if k == 2:
        return is_connected(indptr, indices) and not articulation_points(indptr, indices).any()
    got, _, _ = _eh(indptr, indices, k, k)
    return got >= k


def vertex_connectivity_with_cut(indptr, indices) -> tuple[int, list[int] | None]:
    """Exact connectivity plus a minimum vertex cut (``None`` if complete)."""
    indptr, indices = _as_csr(indptr, indices)
    n = len(indptr) - 1
    degs = np.diff(indptr)
    if n <= 1:
        return 0, None
    k, a, b = _eh(indptr, indices, _BIG, 0)
    if a >= 0:
        return int(k), [int(x) for x in np.flatnonzero(_cut_between(indptr, indices, a, b))]
    if degs.min() == n - 1:
        return int(k), None
    v = int(np.argmin(degs))
    return int(k), [int(x) for x in indices[indptr[v]:indptr[v + 1]]]


def is_connected(indptr, indices) -> bool:
    indptr, indices = _as_csr(indptr, indices)
    n = len(indptr) - 1
    if n == 0:
        return True
    return bool(component_labels(indptr, indices, np.ones(n, np.bool_)).max() == 0)
