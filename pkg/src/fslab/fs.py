"""Friends-and-strangers graphs ``FS(X, Y)``.

Vertices are bijections ``sigma: V(X) -> V(Y)`` indexed by rank (see
:mod:`fslab.perms`).  ``sigma`` and ``sigma o (a c)`` are adjacent when
``ac`` is an edge of ``X`` and ``sigma(a) sigma(c)`` is an edge of ``Y``.

Explicit instances (``n <= 8``) materialize a CSR adjacency, needed for
connectivity computations.  Implicit instances (``n <= 10``) only support
component labeling, done by a BFS that generates neighbors on the fly.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping, Sequence

import numpy as np
from numba import njit

from fslab import connectivity
from fslab.graphs import Graph
from fslab.perms import Bijection, all_perms, rank, rank_rows, swap, swap_table, unrank

EXPLICIT_MAX = 8
IMPLICIT_MAX = 10


class Mode(str, enum.Enum):
    EXPLICIT = "explicit"
    IMPLICIT = "implicit"


class FsInstance:
    """The pair ``(X, Y)`` with a lazily built FS adjacency."""

    def __init__(self, x: Graph, y: Graph, mode: Mode | str | None = None):
        if x.n != y.n:
            raise ValueError(f"X and Y must have the same order ({x.n} vs {y.n})")
        if mode is None:
            mode = Mode.EXPLICIT if x.n <= EXPLICIT_MAX else Mode.IMPLICIT
        mode = Mode(mode)
        if mode is Mode.EXPLICIT and x.n > EXPLICIT_MAX:
            raise ValueError(f"explicit FS graphs need n <= {EXPLICIT_MAX}")
        if x.n > IMPLICIT_MAX:
            raise ValueError(f"FS graphs need n <= {IMPLICIT_MAX}")
        self.x = x
        self.y = y
        self.mode = mode

    def __repr__(self) -> str:
        return f"FsInstance(x={self.x!r}, y={self.y!r}, mode={self.mode.value})"

    @property
    def n(self) -> int:
        return self.x.n

    @property
    def order(self) -> int:
        return math.factorial(self.n)

    def _require_explicit(self) -> None:
        if self.mode is not Mode.EXPLICIT:
            raise ValueError("operation needs an explicit FS instance (n <= 8)")

    @cached_property
    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        """Undirected edge list ``(u, v)`` with ``u < v``, sorted."""
        self._require_explicit()
        src, dst = _directed_edges(self.x, self.y)
        keep = src < dst
        u, v = src[keep], dst[keep]
        order = np.lexsort((v, u))
        return u[order], v[order]

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        self._require_explicit()
        src, dst = _directed_edges(self.x, self.y)
        order = np.lexsort((dst, src))
        indptr = np.zeros(self.order + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=self.order), out=indptr[1:])
        return indptr, dst[order].astype(np.int64)

    def degrees(self) -> np.ndarray:
        return np.diff(self.csr[0])


def _directed_edges(x: Graph, y: Graph) -> tuple[np.ndarray, np.ndarray]:
    n = x.n
    perms = all_perms(n)
    pairs, table = swap_table(n)
    col = {p: j for j, p in enumerate(pairs)}
    yadj = y.adjacency_matrix()
    srcs, dsts = [], []
    for a, c in x.edges():
        ok = np.flatnonzero(yadj[perms[:, a], perms[:, c]])
        srcs.append(ok)
        dsts.append(table[ok, col[(a, c)]])
    if not srcs:
        return np.zeros(0, np.int64), np.zeros(0, np.int64)
    return np.concatenate(srcs).astype(np.int64), np.concatenate(dsts).astype(np.int64)


def fs_neighbors(inst: FsInstance, b: Sequence[int]) -> Iterator[Bijection]:
    """Neighbors of ``b`` generated straight from the edge rule."""
    for a, c in inst.x.edges():
        if inst.y.has_edge(b[a], b[c]):
            yield swap(b, a, c)


def fs_degree(inst: FsInstance, b: Sequence[int]) -> int:
    return sum(1 for _ in fs_neighbors(inst, b))


# ---------------------------------------------------------------------------
# components


@dataclass
class ComponentReport:
    count: int
    sizes: list[int]
    component_of: np.ndarray = field(repr=False)
    per_component_kappa: list[int] | None = None
    labels: dict[str, list] | None = None

    @property
    def component_sizes(self) -> list[int]:
        """Sizes indexed by component id (ids follow the smallest member rank)."""
        return np.bincount(self.component_of, minlength=self.count).tolist()

    def to_json(self) -> dict:
        out = {
            "schema": "fslab.components/1",
            "count": self.count,
            "sizes": self.sizes,
            "componentSizes": self.component_sizes,
            "perComponentKappa": self.per_component_kappa,
        }
        if self.labels is not None:
            out["labels"] = self.labels
        return out


@njit(cache=True)
def _unrank_into(r, n, fact, pool, out):
    for i in range(n):
        pool[i] = i
    size = n
    for i in range(n):
        f = fact[n - 1 - i]
        d = r // f
        r = r - d * f
        out[i] = pool[d]
        for j in range(d, size - 1):
            pool[j] = pool[j + 1]
        size -= 1


@njit(cache=True)
def _rank_of(p, n):
    r = 0
    for i in range(n):
        c = 0
        for j in range(i + 1, n):
            if p[j] < p[i]:
                c += 1
        r = r * (n - i) + c
    return r


@njit(cache=True)
def _implicit_labels(n, xa, xc, yadj, fact):
    total = fact[n]
    label = np.full(total, -1, np.int32)
    queue = np.empty(total, np.int32)
    perm = np.empty(n, np.int64)
    pool = np.empty(n, np.int64)
    c = 0
    for root in range(total):
        if label[root] != -1:
            continue
        label[root] = c
        queue[0] = root
        lo, hi = 0, 1
        while lo < hi:
            r = queue[lo]
            lo += 1
            _unrank_into(r, n, fact, pool, perm)
            for e in range(xa.shape[0]):
                a, b = xa[e], xc[e]
                if yadj[perm[a], perm[b]]:
                    perm[a], perm[b] = perm[b], perm[a]
                    r2 = _rank_of(perm, n)
                    perm[a], perm[b] = perm[b], perm[a]
                    if label[r2] == -1:
                        label[r2] = c
                        queue[hi] = r2
                        hi += 1
        c += 1
    return label


def implicit_component_labels(x: Graph, y: Graph) -> np.ndarray:
    """Component id per rank without materializing FS edges."""
    n = x.n
    if n > IMPLICIT_MAX:
        raise ValueError(f"FS graphs need n <= {IMPLICIT_MAX}")
    edges = x.edges()
    xa = np.array([a for a, _ in edges], dtype=np.int64)
    xc = np.array([c for _, c in edges], dtype=np.int64)
    fact = np.array([math.factorial(i) for i in range(n + 1)], dtype=np.int64)
    return _implicit_labels(n, xa, xc, y.adjacency_matrix(), fact).astype(np.int64)


def component_labels(inst: FsInstance, forbidden: np.ndarray | None = None) -> np.ndarray:
    """Component id per rank, ``-1`` on forbidden vertices (explicit only)."""
    alive = np.ones(inst.order, dtype=np.bool_)
    if forbidden is not None and len(forbidden):
        alive[np.asarray(forbidden, dtype=np.int64)] = False
    return connectivity.component_labels(*inst.csr, alive)


def components(inst: FsInstance) -> ComponentReport:
    if inst.mode is Mode.EXPLICIT:
        labels = component_labels(inst)
    else:
        labels = implicit_component_labels(inst.x, inst.y)
    count = int(labels.max()) + 1 if len(labels) else 0
    sizes = sorted(np.bincount(labels, minlength=count).tolist())
    return ComponentReport(count=count, sizes=sizes, component_of=labels)


def induced_csr(indptr: np.ndarray, indices: np.ndarray, vertices: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """CSR of the subgraph induced on ``vertices`` (relabeled in that order)."""
    vertices = np.asarray(vertices, dtype=np.int64)
    index = np.full(len(indptr) - 1, -1, dtype=np.int64)
    index[vertices] = np.arange(len(vertices))
    deg = np.diff(indptr)
    src = np.repeat(np.arange(len(deg)), deg)
    keep = (index[src] >= 0) & (index[indices] >= 0)
    s, d = index[src[keep]], index[indices[keep]]
    order = np.lexsort((d, s))
    out_ptr = np.zeros(len(vertices) + 1, dtype=np.int64)
    np.cumsum(np.bincount(s, minlength=len(vertices)), out=out_ptr[1:])
    return out_ptr, d[order]


def component_kappas(inst: FsInstance, report: ComponentReport | None = None) -> list[int]:
    """Exact vertex connectivity of each component, by component id."""
    inst._require_explicit()
    report = report or components(inst)
    indptr, indices = inst.csr
    if report.count == 1:
        return [connectivity.vertex_connectivity(indptr, indices)]
    order = np.argsort(report.component_of, kind="stable")
    bounds = np.cumsum([0] + report.component_sizes)
    out = []
    for c in range(report.count):
        members = order[bounds[c]:bounds[c + 1]]
        out.append(connectivity.vertex_connectivity(*induced_csr(indptr, indices, members)))
    return out


def components_with_kappa(inst: FsInstance) -> ComponentReport:
    report = components(inst)
    report.per_component_kappa = component_kappas(inst, report)
    return report


def fs_kappa(inst: FsInstance) -> int:
    """Vertex connectivity of the whole FS graph (0 when disconnected)."""
    inst._require_explicit()
    return connectivity.vertex_connectivity(*inst.csr)


def fs_is_s_connected(inst: FsInstance, s: int) -> bool:
    """BFS for ``s = 1``, articulation points for ``s = 2``, max-flow beyond."""
    inst._require_explicit()
    return connectivity.is_k_connected(*inst.csr, s)


def components_are_s_connected(inst: FsInstance, s: int, report: ComponentReport | None = None) -> bool:
    inst._require_explicit()
    report = report or components(inst)
    indptr, indices = inst.csr
    if report.count == 1:
        return connectivity.is_k_connected(indptr, indices, s)
    order = np.argsort(report.component_of, kind="stable")
    bounds = np.cumsum([0] + report.component_sizes)
    return all(
        connectivity.is_k_connected(*induced_csr(indptr, indices, order[bounds[c]:bounds[c + 1]]), s)
        for c in range(report.count)
    )


# ---------------------------------------------------------------------------
# pinned copies and reachability


@dataclass
class PinnedCopy:
    """``FS(X - removed_x, Y - removed_y)`` and its embedding into ``FS(X, Y)``.

    ``embedding[r]`` is the rank in ``FS(X, Y)`` of the extension (by the
    pinning) of the bijection of rank ``r`` in the smaller instance.
    """

    instance: FsInstance
    pinning: dict[int, int]
    embedding: np.ndarray


def pinned_subgraph(inst: FsInstance, pinning: Mapping[int, int]) -> PinnedCopy:
    pinning = dict(pinning)
    if len(set(pinning.values())) != len(pinning):
        raise ValueError("pinning must be injective (removed sets of equal size)")
    n = inst.n
    kept_x = np.array([v for v in range(n) if v not in pinning], dtype=np.int64)
    targets = set(pinning.values())
    kept_y = np.array([v for v in range(n) if v not in targets], dtype=np.int64)
    sub = FsInstance(inst.x.remove_vertices(pinning), inst.y.remove_vertices(targets), inst.mode)
    small = all_perms(len(kept_x)).astype(np.int64)
    full = np.empty((len(small), n), dtype=np.int64)
    full[:, kept_x] = kept_y[small]
    for a, b in pinning.items():
        full[:, a] = b
    return PinnedCopy(sub, pinning, rank_rows(full))


def embedding_is_isomorphism(inst: FsInstance, copy: PinnedCopy) -> bool:
    """True iff the embedding maps ``FS(X', Y')`` onto the induced subgraph."""
    emb = copy.embedding
    if len(np.unique(emb)) != len(emb):
        return False
    su, sv = copy.instance.edges
    mapped = np.sort(np.stack([emb[su], emb[sv]]), axis=0)
    mapped_codes = np.sort(mapped[0] * inst.order + mapped[1])
    inside = np.zeros(inst.order, dtype=bool)
    inside[emb] = True
    u, v = inst.edges
    keep = inside[u] & inside[v]
    induced_codes = np.sort(u[keep] * inst.order + v[keep])
    return np.array_equal(mapped_codes, induced_codes)


def reachable_with_target(
    inst: FsInstance, start: Sequence[int], forbidden: Sequence[Sequence[int]], x: int, y: int
) -> Bijection | None:
    """A bijection ``s'`` with ``s'(x) = y`` reachable from ``start`` avoiding
    ``forbidden``; ``None`` when unreachable.  Prefers ``start`` itself."""
    start = tuple(start)
    bad = [rank(b) for b in forbidden]
    if rank(start) in bad:
        raise ValueError("start is forbidden")
    if start[x] == y:
        return start
    labels = component_labels(inst, np.array(bad, dtype=np.int64))
    perms = all_perms(inst.n)
    hits = np.flatnonzero((labels == labels[rank(start)]) & (perms[:, x] == y))
    return unrank(int(hits[0]), inst.n) if len(hits) else None


def target_coverage(inst: FsInstance, forbidden_ranks: Sequence[int]) -> bool:
    """True iff every component of ``FS - forbidden`` meets, for every pair
    ``(x, y)``, a bijection sending ``x`` to ``y``."""
    n = inst.n
    labels = component_labels(inst, np.asarray(forbidden_ranks, dtype=np.int64))
    alive = labels >= 0
    perms = all_perms(n).astype(np.int64)[alive]
    lab = labels[alive]
    codes = lab[:, None] * (n * n) + np.arange(n)[None, :] * n + perms
    distinct = np.unique(codes.ravel())
    per_comp = np.bincount(distinct // (n * n), minlength=int(lab.max()) + 1 if len(lab) else 0)
    return bool(np.all(per_comp == n * n))


# ---------------------------------------------------------------------------
# symmetry and export


def inverse_ranks(n: int) -> np.ndarray:
    """``out[r]`` is the rank of the inverse of the bijection of rank ``r``."""
    perms = all_perms(n)
    return rank_rows(np.argsort(perms, axis=1))


def fs_isomorphic_swap_check(x: Graph, y: Graph) -> bool:
    """Check that ``sigma -> sigma^-1`` maps ``FS(X, Y)`` onto ``FS(Y, X)``."""
    a, b = FsInstance(x, y), FsInstance(y, x)
    inv = inverse_ranks(x.n)
    u, v = a.edges
    mu, mv = inv[u], inv[v]
    lo, hi = np.minimum(mu, mv), np.maximum(mu, mv)
    mapped = np.sort(lo * a.order + hi)
    bu, bv = b.edges
    return np.array_equal(mapped, np.sort(bu * b.order + bv))


def export_edge_list(inst: FsInstance) -> str:
    """First line ``n!``, then one ``u v`` line per FS edge (rank ids)."""
    u, v = inst.edges
    lines = [str(inst.order)] + [f"{a} {b}" for a, b in zip(u.tolist(), v.tolist())]
    return "\n".join(lines) + "\n"


def export_rank_table(n: int) -> str:
    """Sidecar: ``rank sigma(0) ... sigma(n-1)`` per line."""
    return "".join(f"{r} {' '.join(map(str, row))}\n" for r, row in enumerate(all_perms(n).tolist()))


def report_json(report: ComponentReport) -> str:
    return json.dumps(report.to_json(), indent=2, sort_keys=True)
