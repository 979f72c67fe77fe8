import itertools
import json
import math

import networkx as nx
import numpy as np
import pytest

from fslab import fs, graphs
from fslab.perms import rank, unrank


def brute_fs(x, y) -> nx.Graph:
    """FS(X, Y) straight from the definition, vertices are tuples."""
    h = nx.Graph()
    verts = list(itertools.permutations(range(x.n)))
    h.add_nodes_from(verts)
    for b in verts:
        for a, c in x.edges():
            if y.has_edge(b[a], b[c]):
                s = list(b)
                s[a], s[c] = s[c], s[a]
                h.add_edge(b, tuple(s))
    return h


PAIRS = [
    (graphs.path(4), graphs.complete(4)),
    (graphs.star(4), graphs.cycle(4)),
    (graphs.cycle(5), graphs.path(5)),
    (graphs.lollipop(5, 3), graphs.star_plus(5)),
    (graphs.dandelion(5, 3), graphs.complete(5)),
]


@pytest.mark.parametrize("x, y", PAIRS)
def test_edges_match_definition(x, y):
    inst = fs.FsInstance(x, y)
    h = brute_fs(x, y)
    u, v = inst.edges
    ours = {frozenset((unrank(int(a), x.n), unrank(int(b), x.n))) for a, b in zip(u, v)}
    assert ours == {frozenset(e) for e in h.edges()}
    comps = sorted(len(c) for c in nx.connected_components(h))
    assert fs.components(inst).sizes == comps


@pytest.mark.parametrize("x, y", PAIRS)
def test_degree_formula(x, y):
    # deg(sigma) = #{ac in E(X) : sigma(a)sigma(c) in E(Y)}
    inst = fs.FsInstance(x, y)
    degs = inst.degrees()
    for r in range(0, inst.order, 7):
        b = unrank(r, x.n)
        expected = sum(1 for a, c in x.edges() if y.has_edge(b[a], b[c]))
        assert degs[r] == expected == fs.fs_degree(inst, b)


def test_vertex_count_is_factorial():
    for n in range(1, 7):
        inst = fs.FsInstance(graphs.path(n), graphs.path(n))
        assert fs.components(inst).component_of.shape == (math.factorial(n),)


def test_neighbors_are_symmetric():
    inst = fs.FsInstance(graphs.wheel(5), graphs.cycle(5))
    b = (4, 2, 0, 1, 3)
    for nb in fs.fs_neighbors(inst, b):
        assert b in set(fs.fs_neighbors(inst, nb))


@pytest.mark.parametrize(
    "x, y, count",
    [
        (graphs.star(5), graphs.cycle(5), 6),
        (graphs.star(4), graphs.cycle(4), 2),
        (graphs.complete(5), graphs.path(5), 1),
        (graphs.path(5), graphs.complete(5), 1),
        (graphs.path(4), graphs.path(4), 8),  # brute force: sizes 1,1,3,3,3,3,5,5
        (graphs.complete_bipartite(2, 2), graphs.complete_bipartite(2, 2), 2),
    ],
)
def test_component_counts(x, y, count):
    assert fs.components(fs.FsInstance(x, y)).count == count


def test_implicit_mode_agrees_with_explicit():
    for x, y in [(graphs.star(6), graphs.cycle(6)), (graphs.dandelion(6, 4), graphs.complete_bipartite(3, 3))]:
        explicit = fs.component_labels(fs.FsInstance(x, y, fs.Mode.EXPLICIT))
        implicit = fs.implicit_component_labels(x, y)
        assert np.array_equal(explicit, implicit)


def test_implicit_mode_is_forced_above_threshold():
    with pytest.raises(ValueError):
        fs.FsInstance(graphs.path(9), graphs.path(9), fs.Mode.EXPLICIT)
    inst = fs.FsInstance(graphs.path(9), graphs.path(9))
    assert inst.mode is fs.Mode.IMPLICIT
    with pytest.raises(ValueError):
        inst.edges


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        fs.FsInstance(graphs.path(4), graphs.path(5))


def test_component_kappas_and_report():
    inst = fs.FsInstance(graphs.dandelion(6, 4), graphs.complete_bipartite(3, 3))
    rep = fs.components_with_kappa(inst)
    assert rep.count == 2
    assert rep.per_component_kappa == [2, 2]
    data = json.loads(fs.report_json(rep))
    assert data["count"] == 2 and data["perComponentKappa"] == [2, 2]
    assert sum(data["sizes"]) == 720


def test_kappa_of_fs_complete():
    # FS(K_4, K_4) is the transposition Cayley graph of S_4: 6-regular, kappa 6
    assert fs.fs_kappa(fs.FsInstance(graphs.complete(4), graphs.complete(4))) == 6


@pytest.mark.parametrize("n", [4])
def test_swap_symmetry_all_pairs(n):
    classes = list(graphs.enumerate_graphs(n))
    for x, y in itertools.product(classes, repeat=2):
        assert fs.fs_isomorphic_swap_check(x, y)


def test_monotone_under_edge_deletion():
    x, y = graphs.lollipop(5, 4), graphs.wheel(5)
    big = fs.FsInstance(x, y)
    small = fs.FsInstance(x.remove_edge(0, 1), y)
    big_codes = set((big.edges[0] * big.order + big.edges[1]).tolist())
    small_codes = set((small.edges[0] * small.order + small.edges[1]).tolist())
    assert small_codes <= big_codes
    # components of the smaller graph refine the bigger one
    lb, ls = fs.component_labels(big), fs.component_labels(small)
    for c in np.unique(ls):
        assert len(np.unique(lb[ls == c])) == 1


class TestPinnedCopies:
    def test_single_vertex(self):
        inst = fs.FsInstance(graphs.lollipop(5, 3), graphs.wheel(5))
        copies = [fs.pinned_subgraph(inst, {2: t}) for t in range(5)]
        for copy in copies:
            assert fs.embedding_is_isomorphism(inst, copy)
            assert len(copy.embedding) == math.factorial(4)
        union = np.concatenate([c.embedding for c in copies])
        assert len(np.unique(union)) == math.factorial(5)

    def test_two_vertices(self):
        inst = fs.FsInstance(graphs.cycle(5), graphs.complete(5))
        copy = fs.pinned_subgraph(inst, {0: 3, 4: 1})
        assert copy.instance.n == 3
        assert fs.embedding_is_isomorphism(inst, copy)
        for r in copy.embedding:
            b = unrank(int(r), 5)
            assert b[0] == 3 and b[4] == 1

    def test_pinning_must_be_injective(self):
        inst = fs.FsInstance(graphs.cycle(4), graphs.cycle(4))
        with pytest.raises(ValueError):
            fs.pinned_subgraph(inst, {0: 1, 2: 1})


class TestReachability:
    def test_dandelion_complete_target(self):
        inst = fs.FsInstance(graphs.dandelion(6, 4), graphs.complete(6))
        start = (0, 1, 2, 3, 4, 5)
        forbidden = [(1, 0, 2, 3, 4, 5)]
        got = fs.reachable_with_target(inst, start, forbidden, 0, 5)
        assert got is not None and got[0] == 5

    def test_start_already_on_target(self):
        inst = fs.FsInstance(graphs.path(4), graphs.complete(4))
        assert fs.reachable_with_target(inst, (2, 0, 1, 3), [], 0, 2) == (2, 0, 1, 3)

    def test_cycle_pair_reaches_every_target(self):
        # brute-force BFS oracle: both 12-vertex components of FS(C_4, C_4)
        # meet every (x, y), also after deleting any one vertex
        inst = fs.FsInstance(graphs.cycle(4), graphs.cycle(4))
        for r in range(24):
            start = unrank(r, 4)
            for f in (r + 1) % 24, (r + 7) % 24:
                for x, y in itertools.product(range(4), repeat=2):
                    got = fs.reachable_with_target(inst, start, [unrank(f, 4)], x, y)
                    assert got is not None and got[x] == y

    def test_unreachable_in_path_pair(self):
        # (1, 3, 0, 2) is an isolated vertex of FS(P_4, P_4)
        inst = fs.FsInstance(graphs.path(4), graphs.path(4))
        start = (1, 3, 0, 2)
        assert fs.fs_degree(inst, start) == 0
        assert fs.reachable_with_target(inst, start, [], 0, 0) is None
        assert fs.reachable_with_target(inst, start, [], 1, 3) == start

    def test_forbidden_start_rejected(self):
        inst = fs.FsInstance(graphs.path(3), graphs.complete(3))
        with pytest.raises(ValueError):
            fs.reachable_with_target(inst, (0, 1, 2), [(0, 1, 2)], 0, 1)

    def test_target_coverage_matches_brute_force(self):
        inst = fs.FsInstance(graphs.star(5), graphs.complete(5))
        forbidden = [rank((4, 3, 2, 1, 0))]
        assert fs.target_coverage(inst, forbidden)
        # every FS(S_4, C_4) component meets every target; FS(P_4, P_4) has
        # singleton components, which cannot
        assert fs.target_coverage(fs.FsInstance(graphs.star(4), graphs.cycle(4)), [])
        assert not fs.target_coverage(fs.FsInstance(graphs.path(4), graphs.path(4)), [])


def test_export_formats():
    inst = fs.FsInstance(graphs.path(3), graphs.complete(3))
    text = fs.export_edge_list(inst)
    lines = text.splitlines()
    assert lines[0] == "6"
    assert len(lines) - 1 == len(inst.edges[0])
    table = fs.export_rank_table(3).splitlines()
    assert table[0] == "0 0 1 2" and table[5] == "5 2 1 0"
