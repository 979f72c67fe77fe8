import itertools

import networkx as nx
import pytest

from fslab import graphs
from fslab.graphs import Family, FamilySpec, Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_kappa(g: Graph) -> int:
    h = to_nx(g)
    if g.n <= 1:
        return 0
    if nx.density(h) == 1:
        return g.n - 1
    return nx.node_connectivity(h)


# OEIS A000088 / A001349
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_counts(n):
    assert sum(1 for _ in graphs.enumerate_graphs(n)) == ALL_COUNTS[n]
    assert sum(1 for _ in graphs.enumerate_connected(n)) == CONNECTED_COUNTS[n]


@pytest.mark.slow
def test_enumeration_counts_seven():
    assert sum(1 for _ in graphs.enumerate_connected(7)) == CONNECTED_COUNTS[7]


def test_enumeration_pairwise_non_isomorphic():
    found = list(graphs.enumerate_graphs(5))
    for g, h in itertools.combinations(found, 2):
        assert not nx.is_isomorphic(to_nx(g), to_nx(h))


@pytest.mark.parametrize("n", [4, 5])
def test_kappa_matches_networkx_on_all_graphs(n):
    for g in graphs.enumerate_graphs(n):
        assert graphs.kappa(g) == nx_kappa(g), graphs.to_edge_list(g)


def test_kappa_matches_networkx_on_connected_six():
    for g in graphs.enumerate_connected(6):
        assert graphs.kappa(g) == nx_kappa(g)


@pytest.mark.parametrize(
    "g, expected",
    [
        (graphs.complete(5), 4),
        (graphs.path(5), 1),
        (graphs.cycle(6), 2),
        (graphs.wheel(6), 3),
        (graphs.theta0(), 2),
        (graphs.complete_bipartite(3, 3), 3),
        (graphs.complete_minus_matching(6, 3), 4),
        (graphs.star(5), 1),
    ],
)
def test_kappa_known_values(g, expected):
    assert graphs.kappa(g) == expected


def test_min_vertex_cut_disconnects():
    for g in graphs.enumerate_connected(5):
        k = graphs.kappa(g)
        cut = graphs.min_vertex_cut(g)
        if graphs.is_complete(g):
            assert cut is None
            continue
        assert len(cut) == k
        assert not g.remove_vertices(cut).is_connected()


def test_is_s_connected_convention():
    # s-connected needs at least s + 1 vertices
    assert graphs.is_s_connected(graphs.complete(4), 3)
    assert not graphs.is_s_connected(graphs.complete(4), 4)
    assert graphs.is_s_connected(graphs.cycle(5), 2)
    assert not graphs.is_s_connected(graphs.path(5), 2)


def test_bipartition_and_odd_cycle():
    bip = graphs.bipartition(graphs.cycle(6))
    assert isinstance(bip, graphs.Bipartition)
    odd = graphs.bipartition(graphs.cycle(5))
    assert isinstance(odd, graphs.OddCycle)
    for g in graphs.enumerate_graphs(5):
        assert graphs.is_bipartite(g) == nx.is_bipartite(to_nx(g))


def test_complement_involution():
    for g in graphs.enumerate_graphs(4):
        assert graphs.complement(graphs.complement(g)) == g
        assert len(g.edges()) + len(graphs.complement(g).edges()) == 6


class TestFamilies:
    def test_star_centre_is_last_vertex(self):
        s = graphs.star(5)
        assert s.degrees()[4] == 4
        assert sorted(s.degrees()[:4]) == [1, 1, 1, 1]

    def test_lollipop_and_dandelion_shapes(self):
        lol = graphs.lollipop(6, 4)
        dand = graphs.dandelion(6, 4)
        assert len(lol.edges()) == 6 + 2
        assert len(dand.edges()) == 5
        assert lol.is_connected() and dand.is_connected()
        assert graphs.is_spanning_subgraph(dand, lol)
        assert max(dand.degrees()) == 4
        assert max(lol.degrees()) == 4

    def test_dl_family_sits_between(self):
        lol, dand = graphs.lollipop(6, 4), graphs.dandelion(6, 4)
        members = list(graphs.dl_family(6, 4))
        assert members
        assert any(graphs.isomorphic(m, lol) for m in members)
        assert any(graphs.isomorphic(m, dand) for m in members)

    def test_theta_graphs(self):
        t0, t1 = graphs.theta0(), graphs.theta1()
        assert (t0.n, len(t0.edges())) == (7, 8)
        assert (t1.n, len(t1.edges())) == (8, 13)
        assert graphs.is_theta0(t0)
        assert graphs.kappa(t0) == 2
        assert not graphs.is_bipartite(t0)
        assert not graphs.is_theta0(graphs.cycle(7))

    @pytest.mark.parametrize(
        "spec, edges",
        [
            (FamilySpec(Family.PATH, 5), 4),
            (FamilySpec(Family.CYCLE, 5), 5),
            (FamilySpec(Family.COMPLETE, 5), 10),
            (FamilySpec(Family.WHEEL, 6), 10),
            (FamilySpec(Family.STAR_PLUS, 5), 5),
            (FamilySpec(Family.COMPLETE_MINUS_MATCHING, 6, t=3), 12),
        ],
    )
    def test_generate(self, spec, edges):
        assert len(graphs.generate(spec).edges()) == edges

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            graphs.generate(FamilySpec(Family.LOLLIPOP, 5))
        with pytest.raises(ValueError):
            graphs.complete_minus_matching(5, 3)


def test_canonical_form_is_isomorphism_invariant():
    g = graphs.lollipop(6, 3)
    for perm in itertools.islice(itertools.permutations(range(6)), 0, 720, 37):
        h = Graph.from_edges(6, [(perm[u], perm[v]) for u, v in g.edges()])
        assert graphs.canonical_form(h) == graphs.canonical_form(g)
    assert graphs.canonical_form(graphs.path(6)) != graphs.canonical_form(graphs.star(6))


@pytest.mark.parametrize("g", [graphs.path(4), graphs.theta1(), graphs.complete(6), Graph.empty(3)])
def test_text_round_trips(g):
    assert graphs.from_compact(graphs.to_compact(g)) == g
    assert graphs.from_edge_list(graphs.to_edge_list(g)) == g


def test_from_edge_list_rejects_garbage():
    with pytest.raises(ValueError):
        graphs.from_edge_list("3\n0 5\n")
    with pytest.raises(ValueError):
        graphs.from_edge_list("3\n1 1\n")
