"""Invariants that separate components of FS graphs, and the known exact
connectivity criteria for special choices of ``X``.

* ``parity_g``: ``g(sigma) = |sigma(A_X) & A_Y| + (sgn(sigma) + 1) / 2``
  whose parity is constant on components when ``X`` and ``Y`` are bipartite.
* ``cyclic_ordering``: the order in which the star leaves appear around the
  cycle, a complete invariant for components of ``FS(S_n, C_n)``.
* ``cycle_criterion``: ``FS(C_n, Y)`` is connected iff the complement of
  ``Y`` is a forest whose tree orders have gcd 1.
* ``wilson_conditions`` and ``wilson_prediction`` for ``FS(S_n, Y)``.
* ``lollipop_criterion``: ``FS(Lollipop, Y)`` is connected iff ``Y`` is
  ``(n - k + 1)``-connected.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from fslab import graphs
from fslab.graphs import Bipartition, Graph
from fslab.perms import all_perms, inverse, sign, sign_table


@dataclass(frozen=True)
class ParityInvariant:
    g: int

    @property
    def parity_class(self) -> int:
        return self.g % 2


def _check_bipartition(bip: Bipartition, n: int, g: Graph | None = None) -> None:
    full = (1 << n) - 1
    if bip.part_a & bip.part_b or bip.part_a | bip.part_b != full:
        raise ValueError("parts must partition the vertex set")
    if g is not None:
        for u, v in g.edges():
            if (bip.part_a >> u & 1) == (bip.part_a >> v & 1):
                raise ValueError(f"edge {u}-{v} lies inside one part")


def parity_g(b: Sequence[int], bip_x: Bipartition, bip_y: Bipartition) -> ParityInvariant:
    n = len(b)
    _check_bipartition(bip_x, n)
    _check_bipartition(bip_y, n)
    hits = sum(1 for x in range(n) if bip_x.part_a >> x & 1 and bip_y.part_a >> b[x] & 1)
    return ParityInvariant(hits + (sign(b) + 1) // 2)


def parity_classes(x: Graph, y: Graph) -> np.ndarray:
    """``g mod 2`` for every rank; ``x`` and ``y`` must be bipartite."""
    bx, by = graphs.bipartition(x), graphs.bipartition(y)
    if not isinstance(bx, Bipartition) or not isinstance(by, Bipartition):
        raise ValueError("parity classes need bipartite X and Y")
    n = x.n
    perms = all_perms(n)
    in_ax = np.array([bx.part_a >> v & 1 for v in range(n)], dtype=bool)
    in_ay = np.array([by.part_a >> v & 1 for v in range(n)], dtype=bool)
    hits = in_ay[perms[:, in_ax]].sum(axis=1)
    even = (sign_table(n) == 1).astype(np.int64)
    return (hits + even) % 2


# ---------------------------------------------------------------------------
# cyclic orderings for FS(S_n, C_n)


def _least_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    return min(seq[i:] + seq[:i] for i in range(len(seq))) if seq else ()


def cyclic_ordering(b: Sequence[int], x: Graph, y: Graph) -> tuple[int, ...]:
    """Leaves of the star ``x`` in the order their images occur around ``y``.

    ``x`` must be ``star(n)`` (center ``n - 1``) and ``y`` must be
    ``cycle(n)``, read ``0, 1, ..., n - 1``.  The result is the least
    rotation, so it is constant exactly on components.
    """
    n = len(b)
    if x != graphs.star(n) or y != graphs.cycle(n):
        raise ValueError("cyclic orderings need X = star(n) and Y = cycle(n)")
    at = inverse(b)
    center = n - 1
    return _least_rotation([at[c] for c in range(n) if at[c] != center])


def cyclic_ordering_count(n: int) -> int:
    """Number of distinct cyclic orderings of ``n - 1`` leaves."""
    return math.factorial(n - 2)


# ---------------------------------------------------------------------------
# criteria


def forest_tree_orders(g: Graph) -> list[int] | None:
    """Orders of the trees of ``g`` if ``g`` is a forest, else ``None``."""
    seen = 0
    orders = []
    for root in range(g.n):
        if seen >> root & 1:
            continue
        comp = 1 << root
        frontier = comp
        while frontier:
            grown = 0
            for v in graphs._bits(frontier):
                grown |= g.adj[v]
            frontier = grown & ~comp
            comp |= grown
        seen |= comp
        size = bin(comp).count("1")
        edges = sum(bin(g.adj[v] & comp).count("1") for v in graphs._bits(comp)) // 2
        if edges != size - 1:
            return None
        orders.append(size)
    return orders


def cycle_criterion(y: Graph) -> bool:
    """Exact connectivity criterion for ``FS(C_n, y)``.

    The gcd runs over all trees, isolated vertices included.
    """
    orders = forest_tree_orders(graphs.complement(y))
    return orders is not None and reduce(math.gcd, orders, 0) == 1


@dataclass(frozen=True)
class WilsonConditions:
    two_connected: bool
    non_bipartite: bool
    is_cycle: bool
    is_theta0: bool

    @property
    def connected(self) -> bool:
        return self.two_connected and self.non_bipartite and not self.is_cycle and not self.is_theta0

    @property
    def exactly_two(self) -> bool:
        return self.two_connected and not self.non_bipartite and not self.is_cycle

    def as_dict(self) -> dict:
        return asdict(self)


def wilson_conditions(y: Graph) -> WilsonConditions:
    if y.n < 4:
        raise ValueError("the FS(S_n, Y) classification needs n >= 4")
    return WilsonConditions(
        two_connected=graphs.is_s_connected(y, 2),
        non_bipartite=not graphs.is_bipartite(y),
        is_cycle=graphs.is_cycle_graph(y),
        is_theta0=graphs.is_theta0(y),
    )


def wilson_prediction(y: Graph) -> str:
    """``"one"``, ``"two"`` or ``"disconnected"`` (some count above one)
    for the components of ``FS(S_n, y)``."""
    w = wilson_conditions(y)
    if w.connected:
        return "one"
    if w.exactly_two:
        return "two"
    return "disconnected"


def lollipop_criterion(n: int, k: int, y: Graph) -> bool:
    if not 2 <= k <= n or y.n != n:
        raise ValueError(f"need 2 <= k <= n = |V(y)|, got n={n}, k={k}, |V(y)|={y.n}")
    return graphs.is_s_connected(y, n - k + 1)


# ---------------------------------------------------------------------------
# labels for reports


def component_labels(x: Graph, y: Graph, component_of: np.ndarray) -> dict[str, list] | None:
    """Per-component invariant labels, indexed by component id.

    Parity classes when both graphs are bipartite, cyclic orderings when
    ``(x, y)`` is the standard ``(star(n), cycle(n))`` pair.
    """
    count = int(component_of.max()) + 1
    # representative: smallest rank in each component
    first = [int(np.argmax(component_of == c)) for c in range(count)]
    out: dict[str, list] = {}
    if graphs.is_bipartite(x) and graphs.is_bipartite(y):
        classes = parity_classes(x, y)
        out["parityClass"] = [int(classes[r]) for r in first]
    n = x.n
    if n >= 3 and x == graphs.star(n) and y == graphs.cycle(n):
        perms = all_perms(n)
        out["cyclicOrdering"] = [list(cyclic_ordering(tuple(perms[r].tolist()), x, y)) for r in first]
    return out or None
