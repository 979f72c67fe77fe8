"""Randomised properties checked against brute force or networkx."""

import itertools

import networkx as nx
import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fslab import fs, graphs, perms
from fslab.graphs import Graph


@st.composite
def small_graphs(draw, n_min=1, n_max=8):
    n = draw(st.integers(n_min, n_max))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def graph_pairs(draw, n):
    x = draw(small_graphs(n, n))
    y = draw(small_graphs(n, n))
    return x, y


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@given(st.permutations(list(range(9))))
def test_rank_round_trip(p):
    assert perms.unrank(perms.rank(p), 9) == tuple(p)


@given(small_graphs(n_max=12))
def test_compact_round_trip(g):
    assert graphs.from_compact(graphs.to_compact(g)) == g


@settings(max_examples=60, deadline=None)
@given(small_graphs(n_min=2, n_max=9))
def test_kappa_against_networkx(g):
    h = to_nx(g)
    expected = g.n - 1 if nx.density(h) == 1 else nx.node_connectivity(h)
    assert graphs.kappa(g) == expected


@settings(max_examples=40, deadline=None)
@given(small_graphs(n_min=2, n_max=7), st.randoms(use_true_random=False))
def test_canonical_form_relabel_invariant(g, rnd):
    p = list(range(g.n))
    rnd.shuffle(p)
    assert graphs.canonical_form(g.relabel(p)) == graphs.canonical_form(g)


@settings(max_examples=25, deadline=None)
@given(graph_pairs(5))
def test_swap_symmetry(pair):
    assert fs.fs_isomorphic_swap_check(*pair)


@settings(max_examples=25, deadline=None)
@given(graph_pairs(5), st.data())
def test_edge_deletion_refines_components(pair, data):
    x, y = pair
    if not x.num_edges:
        return
    a, c = data.draw(st.sampled_from(x.edges()))
    big = fs.component_labels(fs.FsInstance(x, y))
    small = fs.component_labels(fs.FsInstance(x.remove_edge(a, c), y))
    for comp in np.unique(small):
        assert len(np.unique(big[small == comp])) == 1


@settings(max_examples=25, deadline=None)
@given(graph_pairs(5), st.integers(0, 4), st.integers(0, 4))
def test_pinned_copy_is_induced_isomorphism(pair, x0, y0):
    inst = fs.FsInstance(*pair)
    copy = fs.pinned_subgraph(inst, {x0: y0})
    assert fs.embedding_is_isomorphism(inst, copy)


@settings(max_examples=25, deadline=None)
@given(graph_pairs(5))
def test_components_match_networkx(pair):
    x, y = pair
    inst = fs.FsInstance(x, y)
    h = nx.Graph()
    h.add_nodes_from(range(inst.order))
    h.add_edges_from(zip(*[a.tolist() for a in inst.edges]))
    expected = sorted(len(c) for c in nx.connected_components(h))
    assert fs.components(inst).sizes == expected


@st.composite
def dense_graphs(draw, n):
    pairs = list(itertools.combinations(range(n), 2))
    drop = draw(st.lists(st.sampled_from(pairs), max_size=n)) if pairs else []
    return Graph.from_edges(n, [p for p in pairs if p not in drop])


@st.composite
def glued(draw):
    """Two s-connected graphs joined by s vertex-disjoint edges."""
    s = draw(st.integers(1, 3))
    a = draw(st.integers(s + 1, 6))
    b = draw(st.integers(s + 1, 6))
    g1 = draw(dense_graphs(a))
    g2 = draw(dense_graphs(b))
    left = draw(st.permutations(list(range(a))))[:s]
    right = draw(st.permutations(list(range(b))))[:s]
    return s, g1, g2, list(zip(left, right))


@settings(max_examples=80, deadline=None)
@given(glued())
def test_gluing_preserves_s_connectivity(case):
    s, g1, g2, bridges = case
    assume(graphs.is_s_connected(g1, s) and graphs.is_s_connected(g2, s))
    a = g1.n
    edges = g1.edges() + [(u + a, v + a) for u, v in g2.edges()] + [(u, v + a) for u, v in bridges]
    g = Graph.from_edges(a + g2.n, edges)
    assert graphs.is_s_connected(g, s)
    assert nx.node_connectivity(to_nx(g)) >= s
