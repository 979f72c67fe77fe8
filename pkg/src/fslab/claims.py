"""Machine-checkable claims about FS graphs.

Each claim has a scan domain (a generator of :class:`Instance` objects for a
given ``n``) and an ``evaluate`` function returning an :class:`Outcome`: was
the hypothesis satisfied, and if so did the conclusion hold.  Instances are
plain data (graphs plus integer parameters), so any outcome can be replayed
from its witness alone.

Claim ids follow the labels of the statements they check (``Thm1.6``,
``Lem3.8``, ...); ``statement`` spells out the checked implication.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from fslab import fs, graphs, invariants
from fslab.graphs import Graph

# forbidden sets for the reachability lemmas are enumerated exhaustively
# only while there are at most this many of them
FORBIDDEN_SET_LIMIT = 20_000


@dataclass(frozen=True)
class Instance:
    claim: str
    n: int
    x: Graph | None = None
    y: Graph | None = None
    params: tuple[tuple[str, int], ...] = ()

    def param(self, key: str, default: int | None = None) -> int | None:
        return dict(self.params).get(key, default)

    def witness(self) -> dict:
        return {
            "claim": self.claim,
            "n": self.n,
            "x": graphs.to_compact(self.x) if self.x is not None else None,
            "y": graphs.to_compact(self.y) if self.y is not None else None,
            "params": dict(self.params),
        }

    @classmethod
    def from_witness(cls, w: dict) -> "Instance":
        x = graphs.from_compact(w["x"]) if w.get("x") else None
        y = graphs.from_compact(w["y"]) if w.get("y") else None
        params = tuple(sorted((str(k), int(v)) for k, v in (w.get("params") or {}).items()))
        return cls(w["claim"], int(w["n"]), x, y, params)


@dataclass
class Outcome:
    hypothesis: bool
    ok: bool = True
    detail: str = ""


VACUOUS = Outcome(False)


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    instances: Callable[[int], Iterator[Instance]]
    evaluate: Callable[[Instance], Outcome]
    min_n: int
    max_n: int
    default_ns: tuple[int, ...]
    fixed_ns: tuple[int, ...] = ()
    theta_dependent: bool = False

    def supports(self, n: int) -> bool:
        return self.min_n <= n <= self.max_n


# ---------------------------------------------------------------------------
# cached graph data


@dataclass(frozen=True)
class Props:
    n: int
    min_deg: int
    max_deg: int
    kappa: int
    bipartite: bool
    excluded: bool  # isomorphic to C_n or theta0
    complete: bool


@lru_cache(maxsize=None)
def props(g: Graph) -> Props:
    lo, hi, _ = graphs.degree_profile(g)
    return Props(
        n=g.n,
        min_deg=lo,
        max_deg=hi,
        kappa=graphs.kappa(g),
        bipartite=graphs.is_bipartite(g),
        excluded=graphs.is_cycle_or_theta0(g),
        complete=graphs.is_complete(g),
    )


@lru_cache(maxsize=256)
def fs_instance(x: Graph, y: Graph) -> fs.FsInstance:
    return fs.FsInstance(x, y)


@lru_cache(maxsize=256)
def fs_report(x: Graph, y: Graph) -> fs.ComponentReport:
    return fs.components(fs_instance(x, y))


def fs_count(x: Graph, y: Graph) -> int:
    return fs_report(x, y).count


def fs_s_connected(x: Graph, y: Graph, s: int) -> bool:
    return fs.fs_is_s_connected(fs_instance(x, y), s)


def components_s_connected(x: Graph, y: Graph, s: int) -> bool:
    return fs.components_are_s_connected(fs_instance(x, y), s, fs_report(x, y))


@lru_cache(maxsize=None)
def connected_classes(n: int) -> tuple[Graph, ...]:
    return tuple(graphs.enumerate_connected(n))


@lru_cache(maxsize=None)
def all_classes(n: int) -> tuple[Graph, ...]:
    return tuple(graphs.enumerate_graphs(n))


@lru_cache(maxsize=None)
def theta_gate() -> tuple[bool, str]:
    """Behavioral validation of the theta0 / theta1 encodings.

    theta0 must be 2-connected, non-bipartite, lose all but a hexagon after
    deleting a degree-2 vertex, and give a disconnected ``FS(S_7, theta0)``.
    theta1 must have connectivity 3 and contain theta0 as ``theta1 - v``.
    """
    t0, t1 = graphs.theta0(), graphs.theta1()
    checks = {
        "theta0 2-connected": graphs.kappa(t0) == 2,
        "theta0 non-bipartite": not graphs.is_bipartite(t0),
        "theta0 minus a vertex is C6": any(
            graphs.is_cycle_graph(t0.remove_vertices([v])) for v in range(7)
        ),
        "FS(S7, theta0) disconnected": fs.components(fs.FsInstance(graphs.star(7), t0)).count > 1,
        "theta1 3-connected": graphs.kappa(t1) == 3,
        "theta1 minus a vertex is theta0": any(
            graphs.is_theta0(t1.remove_vertices([v])) for v in range(8)
        ),
    }
    failed = [k for k, ok in checks.items() if not ok]
    return not failed, "; ".join(failed)


def _pairs(claim: str, n: int, pool: tuple[Graph, ...] | None = None) -> Iterator[Instance]:
    pool = connected_classes(n) if pool is None else pool
    for x in pool:
        for y in pool:
            yield Instance(claim, n, x, y)


def _ys(claim: str, n: int, pool: tuple[Graph, ...]) -> Iterator[Instance]:
    for y in pool:
        yield Instance(claim, n, None, y)


def _single(claim: str, n: int) -> Iterator[Instance]:
    yield Instance(claim, n)


def _fail(detail: str) -> Outcome:
    return Outcome(True, False, detail)


def _pass(detail: str = "") -> Outcome:
    return Outcome(True, True, detail)


def _s_for(inst: Instance, s_max: int, s_min: int = 2) -> int | None:
    """The connectivity to verify: a requested ``s`` if the hypothesis
    allows it, else the largest ``s`` the hypothesis grants."""
    want = inst.param("s")
    if want is not None:
        return want if s_min <= want <= s_max else None
    return s_max if s_max >= s_min else None


# ---------------------------------------------------------------------------
# Wilson and the degree / connectivity results


def wilson(inst: Instance) -> Outcome:
    y, n = inst.y, inst.n
    count = fs_count(graphs.star(n), y)
    pred = invariants.wilson_prediction(y)
    ok = {"one": count == 1, "two": count == 2, "disconnected": count > 1}[pred]
    return Outcome(True, ok, f"{count} components, predicted {pred}")


def bangachev_two(inst: Instance) -> Outcome:
    px, py = props(inst.x), props(inst.y)
    lo, hi = sorted((px.min_deg, py.min_deg))
    if lo + 2 * hi < 2 * inst.n:
        return VACUOUS
    count = fs_count(inst.x, inst.y)
    return Outcome(True, count == 1, f"{count} components")


def bangachev_three(inst: Instance) -> Outcome:
    n = inst.n
    px, py = props(inst.x), props(inst.y)
    lo, hi = sorted((px.min_deg, py.min_deg))
    if n < 6 or 2 * lo <= n or 2 * lo + 3 * hi < 3 * n:
        return VACUOUS
    count = fs_count(inst.x, inst.y)
    return Outcome(True, count == 1, f"{count} components")


def min_degree_conjecture(inst: Instance) -> Outcome:
    px, py = props(inst.x), props(inst.y)
    lo, hi = sorted((px.min_deg, py.min_deg))
    if 2 * lo + 3 * hi < 3 * inst.n:
        return VACUOUS
    count = fs_count(inst.x, inst.y)
    return Outcome(True, count == 1, f"{count} components")


def bipartite_two_components(inst: Instance) -> Outcome:
    px, py = props(inst.x), props(inst.y)
    if not (px.bipartite and py.bipartite) or graphs.is_cycle_graph(inst.y):
        return VACUOUS
    s = _s_for(inst, px.max_deg + py.kappa - inst.n + 1)
    if s is None:
        return VACUOUS
    count = fs_count(inst.x, inst.y)
    if count != 2:
        return _fail(f"{count} components, expected 2")
    ok = components_s_connected(inst.x, inst.y, s)
    return Outcome(True, ok, f"2 components, each {s}-connected: {ok}")


def bipartite_tightness_instances(n: int) -> Iterator[Instance]:
    for y in connected_classes(n):
        p = props(y)
        if not p.bipartite or not 1 <= p.kappa <= n // 2:
            continue
        for d in range(2, min(n - 1, n - p.kappa) + 1):
            yield Instance("Thm1.5ii", n, graphs.dandelion(n, d), y, (("maxdeg", d),))


def bipartite_tightness(inst: Instance) -> Outcome:
    d = inst.param("maxdeg")
    if props(inst.x).max_deg != d:
        return _fail(f"dandelion has max degree {props(inst.x).max_deg}, not {d}")
    count = fs_count(inst.x, inst.y)
    return Outcome(True, count >= 3, f"{count} components")


def main_sconnectivity(inst: Instance) -> Outcome:
    px, py = props(inst.x), props(inst.y)
    if px.bipartite and py.bipartite or py.excluded:
        return VACUOUS
    s = _s_for(inst, px.max_deg + py.kappa - inst.n + 1)
    if s is None:
        return VACUOUS
    ok = fs_s_connected(inst.x, inst.y, s)
    return Outcome(True, ok, f"{s}-connected: {ok}")


def complete_target(inst: Instance) -> Outcome:
    n = inst.n
    if n < 6:
        return VACUOUS
    d = props(inst.x).max_deg
    ok = fs_s_connected(inst.x, graphs.complete(n), d)
    return Outcome(True, ok, f"FS(X, K_n) {d}-connected: {ok}")


def degree_sum_sconnectivity(inst: Instance) -> Outcome:
    n = inst.n
    px, py = props(inst.x), props(inst.y)
    if n < 6 or py.complete or py.min_deg < px.min_deg:
        return VACUOUS
    s = _s_for(inst, px.max_deg + 2 * py.min_deg - 2 * n + 2)
    if s is None:
        return VACUOUS
    ok = fs_s_connected(inst.x, inst.y, s + 1)
    return Outcome(True, ok, f"{s + 1}-connected: {ok}")


def min_degree_sconnectivity(inst: Instance) -> Outcome:
    n = inst.n
    px, py = props(inst.x), props(inst.y)
    if n < 6 or py.min_deg < px.min_deg or 3 * px.max_deg < 4 * px.min_deg:
        return VACUOUS
    budget = 2 * px.min_deg + 3 * py.min_deg - 3 * n + 3
    s_max = 1
    while budget >= Fraction(3 * (s_max + 1), 2):
        s_max += 1
    s = _s_for(inst, s_max)
    if s is None:
        return VACUOUS
    ok = fs_s_connected(inst.x, inst.y, s)
    return Outcome(True, ok, f"{s}-connected: {ok}")


# ---------------------------------------------------------------------------
# preliminaries


def complete_x(inst: Instance) -> Outcome:
    count = fs_count(graphs.complete(inst.n), inst.y)
    return Outcome(True, (count == 1) == inst.y.is_connected(), f"{count} components")


def _edge_codes(inst: fs.FsInstance) -> np.ndarray:
    u, v = inst.edges
    return u * inst.order + v


def monotonicity(inst: Instance) -> Outcome:
    x, y = inst.x, inst.y
    big = fs_instance(x, y)
    big_codes = _edge_codes(big)
    big_count = fs_count(x, y)
    smaller = [(x.remove_edge(a, b), y) for a, b in x.edges()]
    smaller += [(x, y.remove_edge(a, b)) for a, b in y.edges()]
    for sx, sy in smaller:
        small = fs.FsInstance(sx, sy)
        if not np.isin(_edge_codes(small), big_codes).all():
            return _fail(f"edge of FS({graphs.to_compact(sx)}, {graphs.to_compact(sy)}) missing")
        if fs.components(small).count < big_count:
            return _fail("removing an edge merged components")
    return _pass(f"{len(smaller)} edge deletions")


def star_plus(inst: Instance) -> Outcome:
    y = inst.y
    if not graphs.is_s_connected(y, 2) or props(y).excluded:
        return VACUOUS
    count = fs_count(graphs.star_plus(inst.n), y)
    return Outcome(True, count == 1, f"{count} components")


def bipartite_disconnected(inst: Instance) -> Outcome:
    if inst.n < 3 or not (props(inst.x).bipartite and props(inst.y).bipartite):
        return VACUOUS
    count = fs_count(inst.x, inst.y)
    return Outcome(True, count > 1, f"{count} components")


def parity_invariance(inst: Instance) -> Outcome:
    if not (props(inst.x).bipartite and props(inst.y).bipartite):
        return VACUOUS
    classes = invariants.parity_classes(inst.x, inst.y)
    u, v = fs_instance(inst.x, inst.y).edges
    bad = np.flatnonzero(classes[u] != classes[v])
    if len(bad):
        return _fail(f"edge {int(u[bad[0]])}-{int(v[bad[0]])} changes the parity class")
    return _pass(f"{len(u)} edges")


def cycle_gcd(inst: Instance) -> Outcome:
    count = fs_count(graphs.cycle(inst.n), inst.y)
    crit = invariants.cycle_criterion(inst.y)
    return Outcome(True, crit == (count == 1), f"criterion {crit}, {count} components")


def lollipop_instances(n: int) -> Iterator[Instance]:
    for k in range(2, n + 1):
        for y in all_classes(n):
            yield Instance("Lem2.7", n, None, y, (("k", k),))


def lollipop(inst: Instance) -> Outcome:
    n, k = inst.n, inst.param("k")
    count = fs_count(graphs.lollipop(n, k), inst.y)
    crit = invariants.lollipop_criterion(n, k, inst.y)
    return Outcome(True, crit == (count == 1), f"criterion {crit}, {count} components")


def star_component_kappa(inst: Instance) -> Outcome:
    x = graphs.star(inst.n)
    kappas = fs.component_kappas(fs_instance(x, inst.y), fs_report(x, inst.y))
    d = props(inst.y).min_deg
    bad = sorted({k for k in kappas if k != d})
    return Outcome(True, not bad, f"component kappas {sorted(set(kappas))}, min degree {d}")


def connectivity_lower_bound(inst: Instance) -> Outcome:
    p = props(inst.y)
    if p.complete:
        return VACUOUS
    bound = 2 * p.min_deg + 2 - inst.n
    return Outcome(True, p.kappa >= bound, f"kappa {p.kappa}, bound {bound}")


# ---------------------------------------------------------------------------
# structural lemmas: pinned copies, reachability, gluing


def pinned_copies(inst: Instance) -> Outcome:
    n = inst.n
    big = fs_instance(inst.x, inst.y)
    for x0 in range(n):
        seen = np.zeros(big.order, dtype=bool)
        for y0 in range(n):
            copy = fs.pinned_subgraph(big, {x0: y0})
            if not fs.embedding_is_isomorphism(big, copy):
                return _fail(f"pinning {x0}->{y0} is not an induced isomorphism")
            if seen[copy.embedding].any():
                return _fail(f"pinned copies for x0={x0} overlap")
            seen[copy.embedding] = True
        if not seen.all():
            return _fail(f"pinned copies for x0={x0} miss vertices")
    # two removed vertices: the 2! pinnings of {0,1} onto {0,1}
    if n >= 3:
        a = fs.pinned_subgraph(big, {0: 0, 1: 1})
        b = fs.pinned_subgraph(big, {0: 1, 1: 0})
        if not (fs.embedding_is_isomorphism(big, a) and fs.embedding_is_isomorphism(big, b)):
            return _fail("two-vertex pinning is not an induced isomorphism")
        if np.intersect1d(a.embedding, b.embedding).size:
            return _fail("two-vertex pinned copies overlap")
    return _pass()


def cyclic_orderings(inst: Instance) -> Outcome:
    n = inst.n
    x, y = graphs.star(n), graphs.cycle(n)
    report = fs.components(fs.FsInstance(x, y))
    perms = fs.all_perms(n).tolist()
    owner: dict[tuple[int, ...], int] = {}
    for r, p in enumerate(perms):
        key = invariants.cyclic_ordering(p, x, y)
        c = int(report.component_of[r])
        if owner.setdefault(key, c) != c:
            return _fail(f"ordering {key} spans two components")
    expected = invariants.cyclic_ordering_count(n)
    ok = len(owner) == report.count == expected
    return Outcome(True, ok, f"{len(owner)} orderings, {report.count} components, expected {expected}")


def _coverage_scan(inst: fs.FsInstance, sizes: range) -> tuple[bool, str]:
    """Check target coverage of ``FS - V`` for every forbidden set of each size."""
    checked, skipped = 0, []
    for size in sizes:
        if math.comb(inst.order, size) > FORBIDDEN_SET_LIMIT:
            skipped.append(size)
            continue
        for forbidden in itertools.combinations(range(inst.order), size):
            if not fs.target_coverage(inst, forbidden):
                return False, f"forbidden ranks {list(forbidden)} strand a component"
            checked += 1
    note = f"{checked} forbidden sets"
    if skipped:
        note += f", sizes {skipped} skipped (too many sets)"
    return True, note


def cycle_star_reachability(inst: Instance) -> Outcome:
    ok, note = _coverage_scan(fs.FsInstance(graphs.star(inst.n), graphs.cycle(inst.n)), range(1, 2))
    return Outcome(True, ok, note)


def star_reachability_instances(n: int) -> Iterator[Instance]:
    pool = (graphs.theta0(),) if n == 7 else all_classes(n)
    return _ys("Lem3.4", n, pool)


def star_reachability(inst: Instance) -> Outcome:
    k = props(inst.y).kappa
    if inst.n < 3 or k < 2:
        return VACUOUS
    ok, note = _coverage_scan(fs_instance(graphs.star(inst.n), inst.y), range(1, k))
    return Outcome(True, ok, note)


def general_reachability(inst: Instance) -> Outcome:
    px, py = props(inst.x), props(inst.y)
    s_max = px.max_deg + py.kappa - inst.n + 1
    if inst.n < 3 or s_max < 2:
        return VACUOUS
    ok, note = _coverage_scan(fs_instance(inst.x, inst.y), range(1, s_max))
    return Outcome(True, ok, note)


def wheel_instances(n: int) -> Iterator[Instance]:
    for z in connected_classes(n):
        if props(z).max_deg == n - 2:
            yield Instance("Lem3.7", n, z, graphs.wheel(n))


def wheel(inst: Instance) -> Outcome:
    ok = fs_s_connected(inst.x, inst.y, 2)
    return Outcome(True, ok, f"2-connected: {ok}")


def theta1_dandelion(inst: Instance) -> Outcome:
    x, y = graphs.dandelion(8, 6), graphs.theta1()
    ok = fs.fs_is_s_connected(fs.FsInstance(x, y), 2)
    return Outcome(True, ok, f"FS(Dand_2_6, theta1) 2-connected: {ok}")


def odd_cycle_vertex_deletion(inst: Instance) -> Outcome:
    g = inst.y
    if graphs.is_bipartite(g) or not all(graphs.is_bipartite(g.remove_vertices([v])) for v in range(g.n)):
        return VACUOUS
    ok = graphs.is_cycle_graph(g) and g.n % 2 == 1
    return Outcome(True, ok, "odd cycle" if ok else "not an odd cycle")


def kappa_three(inst: Instance) -> Outcome:
    n, y = inst.n, inst.y
    if n < 4 or props(y).kappa != 3:
        return VACUOUS
    x = graphs.dandelion(n, n - 2)
    count = fs_count(x, y)
    if props(y).bipartite:
        ok = count == 2 and components_s_connected(x, y, 2)
        return Outcome(True, ok, f"bipartite case: {count} components, 2-connected each: {ok}")
    ok = fs_s_connected(x, y, 2)
    return Outcome(True, ok, f"non-bipartite case: 2-connected: {ok}")


def edge_addition(inst: Instance) -> Outcome:
    x, y, n = inst.x, inst.y, inst.n
    px, py = props(x), props(y)
    if n < 3 or not (px.bipartite and py.bipartite):
        return VACUOUS
    if fs_count(x, y) != 2:
        return VACUOUS
    level = min(fs.component_kappas(fs_instance(x, y), fs_report(x, y)))
    level = min(level, (n - 1) * (n - 2))
    bip = graphs.bipartition(x)
    non_edges = [
        (a, b)
        for part in bip.sides()
        for a, b in itertools.combinations(part, 2)
        if not x.has_edge(a, b)
    ]
    if level < 1 or not non_edges:
        return VACUOUS
    for a, b in non_edges:
        if not fs.fs_is_s_connected(fs.FsInstance(x.add_edge(a, b), y), level):
            return _fail(f"adding {a}-{b} is not {level}-connected")
    return _pass(f"l={level}, {len(non_edges)} same-part edges")


def star_plus_sconnectivity(inst: Instance) -> Outcome:
    y = inst.y
    if inst.n < 3 or not graphs.is_s_connected(y, 2) or props(y).excluded:
        return VACUOUS
    s = props(y).min_deg
    ok = fs_s_connected(graphs.star_plus(inst.n), y, s)
    return Outcome(True, ok, f"{s}-connected: {ok}")


def at_most_two_components(inst: Instance) -> Outcome:
    px, py = props(inst.x), props(inst.y)
    level = px.max_deg + py.kappa - inst.n
    if inst.n < 3 or py.excluded or level < 1:
        return VACUOUS
    count = fs_count(inst.x, inst.y)
    if count > 2:
        return _fail(f"{count} components")
    ok = components_s_connected(inst.x, inst.y, level + 1)
    return Outcome(True, ok, f"{count} components, each {level + 1}-connected: {ok}")


def main_corollary(inst: Instance) -> Outcome:
    n = inst.n
    px, py = props(inst.x), props(inst.y)
    if px.bipartite and py.bipartite:
        return VACUOUS
    s = _s_for(inst, px.max_deg + py.kappa - n + 1)
    if s is None:
        return VACUOUS
    if s == 2 and px.max_deg == n - 1 and py.excluded:
        # only the s = 2, Delta(X) = n - 1 case excludes C_n and theta0
        return VACUOUS
    ok = fs_s_connected(inst.x, inst.y, s)
    case = "iii" if s >= 3 else ("i" if px.max_deg == n - 1 else "ii")
    return Outcome(True, ok, f"case ({case}): {s}-connected: {ok}")


def tightness_instances(n: int) -> Iterator[Instance]:
    for d in range(2, n):
        for k in range(1, min(n - 2, n - d) + 1):
            yield Instance("Prop3.14", n, graphs.lollipop(n, d), None, (("kappa", k), ("maxdeg", d)))


def tightness(inst: Instance) -> Outcome:
    d, k = inst.param("maxdeg"), inst.param("kappa")
    if props(inst.x).max_deg != d:
        return _fail(f"lollipop has max degree {props(inst.x).max_deg}, not {d}")
    ys = [y for y in connected_classes(inst.n) if props(y).kappa == k]
    if not ys:
        return VACUOUS
    for y in ys:
        if fs_count(inst.x, y) == 1:
            return _fail(f"FS(X, {graphs.to_compact(y)}) is connected")
    return _pass(f"{len(ys)} graphs with kappa {k}")


# ---------------------------------------------------------------------------
# dandelion-lollipop family and kappa sums


@lru_cache(maxsize=None)
def dl_classes(n: int, k: int) -> tuple[Graph, ...]:
    """DL family members up to isomorphism (first labeled member kept)."""
    seen, out = set(), []
    for g in graphs.dl_family(n, k):
        key = graphs.canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return tuple(out)


def dl_instances(n: int) -> Iterator[Instance]:
    for k in range(2, n):
        for x in dl_classes(n, k):
            for y in all_classes(n):
                yield Instance("Thm4.1", n, x, y, (("k", k),))


def dl_characterization(inst: Instance) -> Outcome:
    n, k, x, y = inst.n, inst.param("k"), inst.x, inst.y
    if n < 4 or not 2 <= k <= n - 1:
        return VACUOUS
    is_dand = graphs.isomorphic(x, graphs.dandelion(n, k))
    py = props(y)
    threshold = graphs.is_s_connected(y, n - k + 1)
    if n == k + 1 and is_dand:
        case, pred = "i", invariants.wilson_prediction(y) == "one"
    elif n == k + 1:
        case, pred = "ii", None if py.excluded else graphs.is_s_connected(y, 2)
    elif n <= 2 * k - 2 and is_dand:
        case, pred = "iii", threshold and not py.bipartite
    elif n <= 2 * k - 2:
        case, pred = "iv", threshold
    else:
        case, pred = "v", threshold
    inst_fs = fs_instance(x, y)
    connected = fs_count(x, y) == 1
    if pred is not None and pred != connected:
        return _fail(f"case ({case}): predicted connected={pred}, got {connected}")
    if connected and not fs.fs_is_s_connected(inst_fs, 2):
        return _fail("case (vi): connected but not 2-connected")
    return _pass(f"case ({case}): connected={connected}")


def problem_instances(n: int) -> Iterator[Instance]:
    for k in range(2, n + 1):
        yield Instance("Prop4.3", n, None, None, (("k", k),))


def lollipop_vs_dandelion(inst: Instance) -> Outcome:
    n, k = inst.n, inst.param("k")
    if n < 4:
        return VACUOUS
    lol, dand = graphs.lollipop(n, k), graphs.dandelion(n, k)
    differ = [y for y in all_classes(n) if (fs_count(lol, y) == 1) != (fs_count(dand, y) == 1)]
    if n >= 2 * k - 1:
        if differ:
            return _fail(f"part (i): Y={graphs.to_compact(differ[0])} separates lollipop and dandelion")
        return _pass("part (i): equivalent on all Y")
    if not differ:
        return _fail("part (ii): no Y separates lollipop and dandelion")
    return _pass(f"part (ii): witness Y={graphs.to_compact(differ[0])}")


def kappa_sum_two_connected(inst: Instance) -> Outcome:
    if props(inst.x).kappa + props(inst.y).kappa < inst.n + 1:
        return VACUOUS
    ok = fs_s_connected(inst.x, inst.y, 2)
    return Outcome(True, ok, f"2-connected: {ok}")


def kappa_sum_odd(inst: Instance) -> Outcome:
    n = inst.n
    if n % 2 == 0 or props(inst.x).kappa + props(inst.y).kappa != n:
        return VACUOUS
    count = fs_count(inst.x, inst.y)
    return Outcome(True, count == 1, f"{count} components")


def _kappa_sum_witness(x: Graph, y: Graph, target: int) -> Outcome:
    total = props(x).kappa + props(y).kappa
    if not y.is_connected() or total != target:
        return _fail(f"witness has kappa sum {total}, expected {target}")
    count = fs_count(x, y)
    return Outcome(True, count > 1, f"kappa sum {total}, {count} components")


def kappa_sum_even_witness(inst: Instance) -> Outcome:
    n = inst.n
    if n < 5 or n % 2:
        return VACUOUS
    return _kappa_sum_witness(graphs.cycle(n), graphs.complete_minus_matching(n, n // 2), n)


def kappa_sum_witness(inst: Instance) -> Outcome:
    n = inst.n
    if n < 5:
        return VACUOUS
    return _kappa_sum_witness(graphs.cycle(n), graphs.complement(graphs.cycle(n)), n - 1)


# ---------------------------------------------------------------------------
# registry


def _claim(cid, statement, instances, evaluate, min_n, max_n, default_ns, **kw) -> Claim:
    return Claim(cid, statement, instances, evaluate, min_n, max_n, tuple(default_ns), **kw)


def _over_pairs(cid):
    return lambda n: _pairs(cid, n)


def _over_all_pairs(cid):
    return lambda n: _pairs(cid, n, all_classes(n))


def _over_ys(cid, connected=False):
    return lambda n: _ys(cid, n, connected_classes(n) if connected else all_classes(n))


def _once(cid):
    return lambda n: _single(cid, n)


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        _claim("Thm1.1", "FS(S_n, Y) has one / two / several components as Y is 2-connected non-bipartite "
               "outside {C_n, theta0} / bipartite 2-connected non-cycle / otherwise",
               lambda n: _ys("Thm1.1", n, connected_classes(n)), wilson, 4, 7, (4, 5, 6, 7),
               theta_dependent=True),
        _claim("Thm1.2", "min(dX, dY) + 2 max(dX, dY) >= 2n implies FS connected",
               _over_pairs("Thm1.2"), bangachev_two, 2, 6, (3, 4, 5, 6)),
        _claim("Thm1.3", "n >= 6, dX, dY > n/2 and 2 min + 3 max >= 3n implies FS connected",
               _over_pairs("Thm1.3"), bangachev_three, 2, 6, (6,)),
        _claim("Conj1.4", "2 min(dX, dY) + 3 max(dX, dY) >= 3n implies FS connected",
               _over_pairs("Conj1.4"), min_degree_conjecture, 2, 6, (3, 4, 5, 6)),
        _claim("Thm1.5i", "bipartite X, Y, Y not C_n, Delta(X) + kappa(Y) >= n + s - 1 implies exactly two "
               "s-connected components", _over_pairs("Thm1.5i"), bipartite_two_components, 3, 6, (4, 5, 6)),
        _claim("Thm1.5ii", "Delta + kappa(Y) <= n: FS(Dand_{n-Delta,Delta}, Y) has at least three components "
               "for bipartite Y", bipartite_tightness_instances, bipartite_tightness, 4, 6, (4, 5, 6)),
        _claim("Thm1.6", "one of X, Y non-bipartite, Y not in {C_n, theta0}, Delta(X) + kappa(Y) >= n + s - 1 "
               "implies FS s-connected", _over_pairs("Thm1.6"), main_sconnectivity, 3, 6, (4, 5, 6)),
        _claim("Thm1.7i", "n >= 6: FS(X, K_n) is Delta(X)-connected",
               lambda n: (Instance("Thm1.7i", n, x) for x in connected_classes(n)),
               complete_target, 2, 6, (6,)),
        _claim("Thm1.7ii", "n >= 6, Y not K_n, dY >= dX, Delta(X) + 2 dY >= 2n + s - 2 implies FS "
               "(s+1)-connected", _over_pairs("Thm1.7ii"), degree_sum_sconnectivity, 2, 6, (6,)),
        _claim("Thm1.8", "n >= 6, dY >= dX, 3 Delta(X) >= 4 dX, 2 dX + 3 dY >= 3n + 3s/2 - 3 implies FS "
               "s-connected", _over_pairs("Thm1.8"), min_degree_sconnectivity, 2, 6, (6,)),
        _claim("Lem2.1", "FS(K_n, Y) connected iff Y connected", _over_ys("Lem2.1"), complete_x, 1, 7, (3, 4, 5, 6)),
        _claim("Lem2.2", "deleting an edge of X or Y only deletes FS edges and never merges components",
               _over_pairs("Lem2.2"), monotonicity, 2, 6, (3, 4, 5)),
        _claim("Lem2.3", "Y 2-connected, not in {C_n, theta0} implies FS(S_n^+, Y) connected",
               _over_ys("Lem2.3"), star_plus, 4, 7, (4, 5, 6)),
        _claim("Lem2.4", "X, Y bipartite of order >= 3 implies FS disconnected",
               _over_all_pairs("Lem2.4"), bipartite_disconnected, 3, 6, (3, 4, 5)),
        _claim("Lem2.5", "the parity of g is constant along FS edges for bipartite X, Y",
               _over_pairs("Lem2.5"), parity_invariance, 2, 6, (3, 4, 5)),
        _claim("Lem2.6", "FS(C_n, Y) connected iff complement(Y) is a forest with tree-order gcd 1",
               _over_ys("Lem2.6"), cycle_gcd, 3, 7, (3, 4, 5, 6)),
        _claim("Lem2.7", "FS(Lollipop_{n-k,k}, Y) connected iff Y is (n-k+1)-connected",
               lollipop_instances, lollipop, 2, 7, (3, 4, 5, 6)),
        _claim("Lem2.8", "every component of FS(S_n, Y) has connectivity delta(Y)",
               _over_ys("Lem2.8", connected=True), star_component_kappa, 3, 6, (3, 4, 5)),
        _claim("Lem2.9", "X not complete implies kappa(X) >= 2 delta(X) + 2 - n",
               _over_ys("Lem2.9"), connectivity_lower_bound, 1, 7, (3, 4, 5, 6, 7)),
        _claim("Lem3.1", "pinned copies are induced copies of FS(X', Y') and are vertex-disjoint",
               _over_all_pairs("Lem3.1"), pinned_copies, 2, 6, (4, 5)),
        _claim("Lem3.2", "components of FS(S_n, C_n) are exactly the cyclic orderings, (n-2)! of them",
               _once("Lem3.2"), cyclic_orderings, 3, 8, (4, 5, 6)),
        _claim("Cor3.3", "every component of FS(S_n, C_n) minus one vertex meets every target (x, y)",
               _once("Cor3.3"), cycle_star_reachability, 3, 6, (3, 4, 5, 6)),
        _claim("Lem3.4", "Y s-connected: every component of FS(S_n, Y) minus s-1 vertices meets every target",
               star_reachability_instances, star_reachability, 3, 7, (4, 5, 7), theta_dependent=True),
        _claim("Lem3.5", "Delta(X) + kappa(Y) >= n + s - 1: every component of FS minus s-1 vertices meets "
               "every target", _over_pairs("Lem3.5"), general_reachability, 3, 6, (4, 5)),
        _claim("Lem3.7", "Delta(Z) = n - 2 implies FS(Z, W_n) 2-connected",
               wheel_instances, wheel, 4, 7, (4, 5, 6)),
        _claim("Lem3.8", "FS(Dand_{2,6}, theta1) is 2-connected",
               _once("Lem3.8"), theta1_dandelion, 8, 8, (8,), fixed_ns=(8,), theta_dependent=True),
        _claim("Lem3.9", "non-bipartite G with every G - v bipartite is an odd cycle",
               _over_ys("Lem3.9"), odd_cycle_vertex_deletion, 1, 7, (3, 4, 5, 6, 7)),
        _claim("Lem3.10", "kappa(Y) = 3: FS(Dand_{2,n-2}, Y) has two 2-connected components (bipartite Y) "
               "or is 2-connected", _over_ys("Lem3.10"), kappa_three, 4, 6, (4, 5, 6)),
        _claim("Lem3.11", "two l-connected components plus a same-part X edge give an l-connected FS",
               _over_pairs("Lem3.11"), edge_addition, 3, 6, (4, 5)),
        _claim("Cor3.12", "Y 2-connected, not in {C_n, theta0} implies FS(S_n^+, Y) delta(Y)-connected",
               _over_ys("Cor3.12"), star_plus_sconnectivity, 3, 6, (4, 5, 6)),
        _claim("Lem3.13", "Y not in {C_n, theta0}, Delta(X) + kappa(Y) >= n + l: at most two components, "
               "each (l+1)-connected", _over_pairs("Lem3.13"), at_most_two_components, 3, 6, (4, 5, 6)),
        _claim("Cor3.13", "one of X, Y non-bipartite, Delta(X) + kappa(Y) >= n + s - 1 implies FS s-connected "
               "(C_n, theta0 excluded only when s = 2, Delta(X) = n - 1)",
               _over_pairs("Cor3.13"), main_corollary, 3, 6, (4, 5, 6)),
        _claim("Prop3.14", "Delta + kappa <= n: FS(Lollipop_{n-Delta,Delta}, Y) disconnected for every "
               "connected Y with kappa(Y) = kappa", tightness_instances, tightness, 3, 6, (4, 5, 6)),
        _claim("Thm4.1", "connectivity of FS(X, Y) for X in DL_{n-k,k} follows the case split, and "
               "connected implies 2-connected", dl_instances, dl_characterization, 4, 6, (4, 5, 6)),
        _claim("Prop4.3", "FS(Lollipop, Y) and FS(Dand, Y) agree on connectivity iff n >= 2k - 1",
               problem_instances, lollipop_vs_dandelion, 4, 6, (4, 5, 6)),
        _claim("Thm4.4i", "kappa(X) + kappa(Y) >= n + 1 implies FS 2-connected",
               _over_pairs("Thm4.4i"), kappa_sum_two_connected, 2, 6, (3, 4, 5, 6)),
        _claim("Thm4.4ii", "kappa(X) + kappa(Y) = n with n odd implies FS connected",
               _over_pairs("Thm4.4ii"), kappa_sum_odd, 2, 6, (3, 4, 5)),
        _claim("Thm4.4iii", "n even >= 6: FS(C_n, K_n - (n/2)e) is disconnected with kappa sum n",
               _once("Thm4.4iii"), kappa_sum_even_witness, 5, 8, (6,)),
        _claim("Thm4.4iv", "n >= 5: FS(C_n, complement of C_n) is disconnected with kappa sum n - 1",
               _once("Thm4.4iv"), kappa_sum_witness, 5, 8, (5, 6)),
    ]
}


def get_claim(cid: str, registry: dict[str, Claim] | None = None) -> Claim:
    registry = CLAIMS if registry is None else registry
    try:
        return registry[cid]
    except KeyError:
        raise KeyError(f"unknown claim id {cid!r}") from None


def evaluate(inst: Instance, registry: dict[str, Claim] | None = None) -> Outcome:
    claim = get_claim(inst.claim, registry)
    if claim.theta_dependent:
        ok, why = theta_gate()
        if not ok:
            return _fail(f"theta encoding failed validation: {why}")
    return claim.evaluate(inst)
