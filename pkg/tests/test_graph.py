import networkx as nx
import pytest

from tuttetrees.graph import (
    Graph,
    GraphError,
    SpanningTree,
    TreePath,
    connected_mask,
    delete_vertices,
    is_connected,
    mask_of,
    mask_vertices,
    tree_path,
)

from conftest import complete_graph, cycle_graph, path_graph, random_connected


def test_masks_roundtrip():
    assert mask_of([0, 2, 5]) == 0b100101
    assert mask_vertices(0b100101) == [0, 2, 5]
    assert mask_vertices(0) == []


def test_graph_basic():
    g = Graph(4, [(0, 1), (1, 2), (2, 0)])
    assert g.n == 4 and g.m == 3
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 3)
    assert g.degree(1) == 2 and g.degree(3) == 0
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, [(-1, 0)])


def test_null_graph_is_connected():
    g = Graph(0, [])
    assert is_connected(g)
    # removing everything leaves the null graph, which counts as connected
    assert connected_mask(Graph(3, [(0, 1), (1, 2)]), 0)


def test_connected_matches_networkx(rng):
    for _ in range(60):
        n = rng.randrange(1, 9)
        edges = [
            e
            for e in complete_graph(n).edges
            if rng.random() < 0.4
        ]
        g = Graph(n, edges)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(edges)
        assert is_connected(g) == nx.is_connected(h)


def test_connected_mask_on_subsets(rng):
    for _ in range(40):
        g = random_connected(rng, 7)
        h = nx.Graph(g.edges)
        h.add_nodes_from(range(7))
        mask = rng.randrange(1, 1 << 7)
        keep = mask_vertices(mask)
        assert connected_mask(g, mask) == nx.is_connected(h.subgraph(keep))


def test_delete_vertices():
    g = cycle_graph(5)
    sub = delete_vertices(g, [2])
    assert sub.graph.n == 4
    # the remaining 4-cycle vertices relabel to 0..3 preserving order
    assert sub.orig == (0, 1, 3, 4)
    assert sub.graph.m == 3


def test_tree_path_single_vertex_allowed():
    g = path_graph(3)
    t = SpanningTree(g, g.edges)
    p = tree_path(t, 1, 1)
    assert p.vertices == (1,)
    assert p.mask == 0b010


def test_spanning_tree_validation():
    g = cycle_graph(4)
    with pytest.raises(GraphError):
        SpanningTree(g, [(0, 1)])  # too few edges
    with pytest.raises(GraphError):
        SpanningTree(g, [(0, 1), (1, 2), (0, 2)])  # not a graph edge (0,2)
    with pytest.raises(GraphError):
        SpanningTree(cycle_graph(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)])


def test_tree_paths_match_networkx(rng):
    for _ in range(25):
        g = random_connected(rng, 8)
        h = nx.Graph(g.edges)
        t_edges = list(nx.minimum_spanning_tree(h).edges)
        t = SpanningTree(g, [tuple(sorted(e)) for e in t_edges])
        ht = nx.Graph(t.edges)
        for u in range(g.n):
            for v in range(g.n):
                expect = tuple(nx.shortest_path(ht, u, v))
                assert t.path_vertices(u, v) == expect
                assert t.path_mask(u, v) == mask_of(expect)


def test_leaves_and_degrees():
    g = path_graph(5)
    t = SpanningTree(g, g.edges)
    assert t.leaves == (0, 4)
    assert t.tree_degree(2) == 2
    star = Graph(5, [(0, i) for i in range(1, 5)])
    st = SpanningTree(star, star.edges)
    assert st.leaves == (1, 2, 3, 4)


def test_tree_path_reversed():
    g = path_graph(4)
    t = SpanningTree(g, g.edges)
    p = tree_path(t, 0, 3)
    assert p.reversed().vertices == tuple(reversed(p.vertices))
    assert p.reversed().mask == p.mask


def test_tree_path_rejects_non_path():
    with pytest.raises(GraphError):
        TreePath((0, 0))
