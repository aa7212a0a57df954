import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gallai.graph import (
    Edge,
    Graph,
    GraphError,
    complement,
    connected_components,
    find_cycle,
    find_isomorphism,
    induced_subgraph,
    is_forest,
    is_isomorphic_small,
    is_tree,
    relabel,
)

from conftest import brute_isomorphic, star


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_edge_is_canonical():
    assert Edge.of(3, 1) == Edge(1, 3)
    with pytest.raises(GraphError):
        Edge.of(2, 2)


def test_constructor_rejects_bad_adjacency():
    with pytest.raises(GraphError, match="self-loop"):
        Graph([0b1])
    with pytest.raises(GraphError, match="asymmetric"):
        Graph([0b10, 0b00])
    with pytest.raises(GraphError, match="outside"):
        Graph([0b100, 0b0])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_vertex_cap():
    with pytest.raises(GraphError):
        Graph.from_edges((1 << 16) + 1, [])


def test_edges_sorted():
    g = Graph.from_edges(4, [(3, 2), (1, 0), (0, 3)])
    assert g.edges() == [(0, 1), (0, 3), (2, 3)]
    assert g.m == 3


def test_induced_subgraph_examples():
    c5 = Graph.cycle(5)
    assert induced_subgraph(c5, [0, 1, 2, 3]) == Graph.path(4)
    assert induced_subgraph(c5, range(5)) == c5
    assert induced_subgraph(Graph.complete(4), [0, 1, 2]) == Graph.complete(3)
    # relabelled in ascending order of the original index
    assert induced_subgraph(c5, [4, 0, 1]) == Graph.from_edges(3, [(0, 1), (0, 2)])
    with pytest.raises(GraphError):
        induced_subgraph(c5, [5])


def test_complement_examples():
    assert complement(Graph.complete(3)) == Graph.empty(3)
    c5 = Graph.cycle(5)
    assert brute_isomorphic(complement(c5), c5)
    assert is_isomorphic_small(complement(c5), c5)


def test_forest_and_tree_examples():
    p4 = Graph.path(4)
    assert is_forest(p4) and is_tree(p4)
    assert not is_forest(Graph.complete(3))
    two_edges = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert is_forest(two_edges) and not is_tree(two_edges)
    assert not is_tree(Graph.empty(0))
    assert is_tree(Graph.empty(1))


def test_components_examples():
    assert connected_components(Graph.path(3)) == [(0, 1, 2)]
    assert connected_components(Graph.empty(3)) == [(0,), (1,), (2,)]
    k3_k2 = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    assert connected_components(k3_k2) == [(0, 1, 2), (3, 4)]


def test_isomorphism_examples():
    c5 = Graph.cycle(5)
    assert is_isomorphic_small(c5, complement(c5))
    assert not is_isomorphic_small(star(3), Graph.complete(3))
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    h = relabel(g, [4, 2, 0, 1, 3])
    assert is_isomorphic_small(g, h)
    phi = find_isomorphism(g, h)
    assert relabel(g, phi) == h


def test_isomorphism_cap():
    with pytest.raises(GraphError):
        is_isomorphic_small(Graph.empty(11), Graph.empty(11))


@given(graphs(max_n=6), st.randoms())
def test_isomorphism_agrees_with_brute_force(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert is_isomorphic_small(g, h)
    other = complement(h)
    assert is_isomorphic_small(g, other) == brute_isomorphic(g, other)


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_induced_identity(g):
    assert induced_subgraph(g, range(g.n)) == g


@given(graphs())
def test_forest_edge_count(g):
    comps = connected_components(g)
    assert is_forest(g) == (g.m == g.n - len(comps))
    if is_tree(g):
        assert is_forest(g)
    assert (find_cycle(g) is None) == is_forest(g)


@given(graphs())
def test_find_cycle_is_a_cycle(g):
    cycle = find_cycle(g)
    if cycle is None:
        return
    assert len(cycle) >= 3 and len(set(cycle)) == len(cycle)
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert g.has_edge(a, b)


@given(graphs())
def test_components_partition(g):
    comps = connected_components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    for c in comps:
        assert list(c) == sorted(c)
