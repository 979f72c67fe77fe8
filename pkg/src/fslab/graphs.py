"""Labeled simple graphs, the named families used throughout the lab, and
classical graph computations.

Vertices are ``0..n-1``; adjacency is stored as one ``int`` bit set per
vertex.  Graphs are immutable and hashable, so they can be used as cache
keys and shared freely between worker processes.

Family labeling conventions (frozen; every predicate built on top of them
is isomorphism-invariant, so labels never leak into results):

* ``path(n)``: ``0 - 1 - ... - n-1``
* ``cycle(n)``: the path plus ``n-1 - 0``
* ``star(n)``: center ``n-1``, leaves ``0..n-2``
* ``star_plus(n)``: the star plus the leaf edge ``0 - 1``
* ``wheel(n)``: hub ``n-1`` over the cycle ``0..n-2``
* ``lollipop(n, k)``: path ``0..n-k`` whose end ``n-k`` is a vertex of the
  clique on ``n-k..n-1``
* ``dandelion(n, k)``: path ``0..n-k`` whose end ``n-k`` is the center of a
  star with leaves ``n-k+1..n-1``
* ``complete_minus_matching(n, t)``: ``K_n`` minus ``0-1, 2-3, ...``
* ``theta0()``: hexagon ``0..5`` plus vertex ``6`` adjacent to ``0`` and ``3``
  (hubs ``0`` and ``3`` joined by paths of lengths 3, 3 and 2)
* ``theta1()``: ``theta0()`` plus vertex ``7`` adjacent to the five
  degree-2 vertices ``1, 2, 4, 5, 6``
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 64
MAX_CANONICAL_ORDER = 10
MAX_ENUMERATION_ORDER = 7


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1`` with bit-set adjacency."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"graph order must be in 0..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(nb).count("1") for nb in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            m[u, v] = m[v, u] = True
        return m

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + [(u, v)])

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        return Graph.from_edges(self.n, [e for e in self.edges() if set(e) != {u, v}])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def remove_vertices(self, removed: Iterable[int]) -> "Graph":
        """Induced subgraph on the kept vertices, relabeled in increasing order."""
        removed = set(removed)
        kept = [v for v in range(self.n) if v not in removed]
        index = {v: i for i, v in enumerate(kept)}
        return Graph.from_edges(
            len(kept),
            [(index[u], index[v]) for u, v in self.edges() if u in index and v in index],
        )

    def is_connected(self) -> bool:
        return _connected_mask(self.adj, (1 << self.n) - 1)


def _connected_mask(adj: Sequence[int], alive: int) -> bool:
    """True iff the subgraph induced by the bit set ``alive`` is connected."""
    if alive == 0:
        return True
    seen = alive & -alive
    frontier = seen
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= adj[v]
        frontier = reach & alive & ~seen
        seen |= frontier
    return seen == alive


# ---------------------------------------------------------------------------
# families


class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    STAR_PLUS = "star-plus"
    WHEEL = "wheel"
    THETA0 = "theta0"
    THETA1 = "theta1"
    LOLLIPOP = "lollipop"
    DANDELION = "dandelion"
    COMPLETE_MINUS_MATCHING = "complete-minus-matching"


@dataclass(frozen=True)
class FamilySpec:
    kind: Family
    n: int
    k: int | None = None
    t: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Family(self.kind))
        kind, n, k, t = self.kind, self.n, self.k, self.t
        if n < 1:
            raise ValueError("order must be positive")
        if kind in (Family.LOLLIPOP, Family.DANDELION):
            if k is None or not 2 <= k <= n:
                raise ValueError(f"{kind.value} needs 2 <= k <= n, got k={k}, n={n}")
        elif k is not None:
            raise ValueError(f"{kind.value} takes no k parameter")
        if kind is Family.COMPLETE_MINUS_MATCHING:
            if t is None or not 1 <= t <= n // 2:
                raise ValueError(f"complete-minus-matching needs 1 <= t <= n//2, got t={t}, n={n}")
        elif t is not None:
            raise ValueError(f"{kind.value} takes no t parameter")
        if kind is Family.THETA0 and n != 7:
            raise ValueError("theta0 has order 7")
        if kind is Family.THETA1 and n != 8:
            raise ValueError("theta1 has order 8")
        if kind is Family.CYCLE and n < 3:
            raise ValueError("cycle needs n >= 3")
        if kind is Family.STAR_PLUS and n < 3:
            raise ValueError("star-plus needs n >= 3")
        if kind is Family.WHEEL and n < 4:
            raise ValueError("wheel needs n >= 4")

    def __str__(self) -> str:
        parts = [self.kind.value, str(self.n)]
        if self.k is not None:
            parts.append(str(self.k))
        if self.t is not None:
            parts.append(str(self.t))
        return ":".join(parts)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(n: int) -> Graph:
    return Graph.from_edges(n, [(i, n - 1) for i in range(n - 1)])


def star_plus(n: int) -> Graph:
    return star(n).add_edge(0, 1)


def wheel(n: int) -> Graph:
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = n - 1
    return Graph.from_edges(n, [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)])


def lollipop(n: int, k: int) -> Graph:
    a = n - k
    edges = [(i, i + 1) for i in range(a)]
    edges += itertools.combinations(range(a, n), 2)
    return Graph.from_edges(n, edges)


def dandelion(n: int, k: int) -> Graph:
    a = n - k
    edges = [(i, i + 1) for i in range(a)]
    edges += [(a, leaf) for leaf in range(a + 1, n)]
    return Graph.from_edges(n, edges)


def complete_minus_matching(n: int, t: int) -> Graph:
    if not 1 <= t <= n // 2:
        raise ValueError("need 1 <= t <= n//2")
    missing = {(2 * i, 2 * i + 1) for i in range(t)}
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if e not in missing])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def theta0() -> Graph:
    return Graph.from_edges(7, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (3, 6)])


def theta1() -> Graph:
    g = theta0()
    return Graph.from_edges(8, g.edges() + [(v, 7) for v in (1, 2, 4, 5, 6)])


def generate(spec: FamilySpec) -> Graph:
    kind, n = spec.kind, spec.n
    if kind is Family.PATH:
        return path(n)
    if kind is Family.CYCLE:
        return cycle(n)
    if kind is Family.COMPLETE:
        return complete(n)
    if kind is Family.STAR:
        return star(n)
    if kind is Family.STAR_PLUS:
        return star_plus(n)
    if kind is Family.WHEEL:
        return wheel(n)
    if kind is Family.THETA0:
        return theta0()
    if kind is Family.THETA1:
        return theta1()
    if kind is Family.LOLLIPOP:
        return lollipop(n, spec.k)
    if kind is Family.DANDELION:
        return dandelion(n, spec.k)
    return complete_minus_matching(n, spec.t)


# ---------------------------------------------------------------------------
# classical computations


def degree_profile(g: Graph) -> tuple[int, int, list[int]]:
    """``(min degree, max degree, degree sequence by vertex)``."""
    degs = g.degrees()
    if not degs:
        return 0, 0, []
    return min(degs), max(degs), degs


@dataclass(frozen=True)
class Bipartition:
    part_a: int
    part_b: int

    def sides(self) -> tuple[list[int], list[int]]:
        return list(_bits(self.part_a)), list(_bits(self.part_b))


@dataclass(frozen=True)
class OddCycle:
    """Certificate of non-bipartiteness: a closed walk of odd length.

    ``walk[0] == walk[-1]``; the number of edges is ``len(walk) - 1``.
    """

    walk: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.walk) - 1


def bipartition(g: Graph) -> Bipartition | OddCycle:
    """Two-color ``g`` component by component, or return an odd cycle."""
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in _bits(g.adj[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return OddCycle(_odd_cycle(u, v, parent, depth))
    a = sum(1 << v for v in range(g.n) if color[v] == 0)
    return Bipartition(a, ((1 << g.n) - 1) & ~a)


def _odd_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [u], [v]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    # left: u .. lca, right: v .. lca; close the cycle through edge u-v
    return tuple(left + right[-2::-1] + [u])


def is_bipartite(g: Graph) -> bool:
    return isinstance(bipartition(g), Bipartition)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def is_spanning_subgraph(x: Graph, y: Graph) -> bool:
    """True iff ``E(x)`` is a subset of ``E(y)`` (same vertex set)."""
    if x.n != y.n:
        raise ValueError(f"order mismatch: {x.n} vs {y.n}")
    return all(a & ~b == 0 for a, b in zip(x.adj, y.adj))


def csr_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    indices = []
    for v in range(g.n):
        nb = g.neighbors(v)
        indices.extend(nb)
        indptr[v + 1] = indptr[v] + len(nb)
    return indptr, np.asarray(indices, dtype=np.int64)


def kappa(g: Graph) -> int:
    """Exact vertex connectivity; ``kappa(K_n) = n - 1``, 0 if disconnected."""
    from fslab import connectivity

    return connectivity.vertex_connectivity(*csr_arrays(g))


def min_vertex_cut(g: Graph) -> list[int] | None:
    """A minimum vertex cut, or ``None`` when ``g`` is complete (no cut exists)."""
    from fslab import connectivity

    return connectivity.vertex_connectivity_with_cut(*csr_arrays(g))[1]


def is_s_connected(g: Graph, s: int, subset_limit: int = 200_000) -> bool:
    """True iff ``g`` has at least ``s + 1`` vertices and no cut of size ``< s``.

    Decided by removing every vertex subset of size ``s - 1`` and testing
    connectivity; independent of :func:`kappa`.  Falls back to :func:`kappa`
    only when there would be more than ``subset_limit`` subsets.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if g.n < s + 1:
        return False
    full = (1 << g.n) - 1
    count = 1
    for i in range(s - 1):
        count = count * (g.n - i) // (i + 1)
    if count > subset_limit:
        return kappa(g) >= s
    # removing fewer than s-1 vertices is implied: a cut of size < s-1 can be
    # padded to size s-1 while keeping two vertices separated (n >= s+1)
    for removed in itertools.combinations(range(g.n), s - 1):
        alive = full
        for v in removed:
            alive &= ~(1 << v)
        if not _connected_mask(g.adj, alive):
            return False
    return True


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and g.is_connected()


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def is_theta0(g: Graph) -> bool:
    if g.n != 7 or sorted(g.degrees()) != [2, 2, 2, 2, 2, 3, 3]:
        return False
    return canonical_form(g) == canonical_form(theta0())


def is_cycle_or_theta0(g: Graph) -> bool:
    return is_cycle_graph(g) or is_theta0(g)


# ---------------------------------------------------------------------------
# canonical forms and enumeration


def _refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    """Color refinement with canonically named colors (isomorphism-invariant)."""
    n = len(colors)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in _bits(adj[v])))) for v in range(n)]
        names = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [names[s] for s in sigs]
        if len(names) == len(set(colors)):
            return new
        colors = new


def _leaf_code(adj: Sequence[int], colors: list[int]) -> int:
    n = len(colors)
    order = sorted(range(n), key=colors.__getitem__)
    code = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (row >> order[j] & 1)
    return code


def _search(adj: Sequence[int], colors: list[int]) -> int:
    colors = _refine(adj, colors)
    n = len(colors)
    if len(set(colors)) == n:
        return _leaf_code(adj, colors)
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, k in counts.items() if k > 1)
    best = None
    for v in range(n):
        if colors[v] != target:
            continue
        split = [2 * c + (1 if (c == target and u != v) else 0) for u, c in enumerate(colors)]
        code = _search(adj, split)
        if best is None or code < best:
            best = code
    return best


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-complete byte key: equal iff the graphs are isomorphic.

    The key is the minimum upper-triangle adjacency bit string over the
    vertex orderings reached by individualization and refinement; those
    orderings are chosen by an isomorphism-invariant rule (refined degree
    classes first), so the minimum is an invariant and every leaf is a
    genuine relabeling of ``g``.
    """
    if g.n > MAX_CANONICAL_ORDER:
        raise ValueError(f"canonical_form supports n <= {MAX_CANONICAL_ORDER}")
    code = _search(g.adj, [0] * g.n) if g.n else 0
    width = (g.n * (g.n - 1) // 2 + 7) // 8
    return bytes([g.n]) + code.to_bytes(width, "big")


def isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)


def _from_code(n: int, code: int) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    m = len(pairs)
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if code >> (m - 1 - i) & 1])


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[Graph, ...]:
    level = {canonical_form(Graph.empty(n)): Graph.empty(n)}
    found = dict(level)
    for _ in range(n * (n - 1) // 2):
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for u, v in itertools.combinations(range(n), 2):
                if g.has_edge(u, v):
                    continue
                h = g.add_edge(u, v)
                key = canonical_form(h)
                if key not in nxt:
                    nxt[key] = h
        found.update(nxt)
        level = nxt
    # representatives are the canonical relabelings, ordered by (edges, key)
    keyed = sorted(found, key=lambda key: (found[key].num_edges, key))
    return tuple(_from_code(n, int.from_bytes(key[1:], "big")) for key in keyed)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}")
    return iter(_all_classes(n))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs."""
    return (g for g in enumerate_graphs(n) if g.is_connected())


def dl_family(n: int, k: int) -> Iterator[Graph]:
    """All labeled graphs between ``dandelion(n, k)`` and ``lollipop(n, k)``."""
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    base = dandelion(n, k)
    optional = sorted(set(lollipop(n, k).edges()) - set(base.edges()))
    for r in range(len(optional) + 1):
        for extra in itertools.combinations(optional, r):
            yield Graph.from_edges(n, base.edges() + list(extra))


# ---------------------------------------------------------------------------
# text formats


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    tokens = text.split()
    if not tokens:
        raise ValueError("empty graph text")
    n = int(tokens[0])
    rest = [int(t) for t in tokens[1:]]
    if len(rest) % 2:
        raise ValueError("odd number of endpoint tokens")
    return Graph.from_edges(n, zip(rest[0::2], rest[1::2]))


def to_compact(g: Graph) -> str:
    """``n:hex`` where the hex digits spell the upper-triangle bit string.

    Pairs are ordered ``(0,1), (0,2), ..., (0,n-1), (1,2), ...``; the first
    pair is the most significant bit; the string is right-padded with zero
    bits to a whole number of hex digits.  A graph with no pairs is ``n:``.
    """
    pairs = list(itertools.combinations(range(g.n), 2))
    bits = "".join("1" if g.has_edge(u, v) else "0" for u, v in pairs)
    bits += "0" * (-len(bits) % 4)
    digits = "".join(f"{int(bits[i:i + 4], 2):x}" for i in range(0, len(bits), 4))
    return f"{g.n}:{digits}"


def from_compact(text: str) -> Graph:
    head, _, digits = text.strip().partition(":")
    n = int(head)
    pairs = list(itertools.combinations(range(n), 2))
    if len(digits) != (len(pairs) + 3) // 4:
        raise ValueError(f"expected {(len(pairs) + 3) // 4} hex digits for n={n}")
    bits = "".join(f"{int(d, 16):04b}" for d in digits)
    if "1" in bits[len(pairs):]:
        raise ValueError("nonzero padding bits")
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b == "1"])
