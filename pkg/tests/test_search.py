import itertools

import networkx as nx
import pytest

from tuttetrees.graph import Graph, GraphError, SpanningTree
from tuttetrees.nonsep import (
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    verify_fundamental_tutte_tree,
    verify_tutte_tree,
)
from tuttetrees.planar import is_planar
from tuttetrees.search import (
    ConstructionError,
    SearchConfig,
    SpanningTreeOverflow,
    build_ftt_block_structured,
    build_ftt_series_parallel,
    check_spg_conditions,
    decide_planar_tutte,
    enumerate_spanning_trees,
    find_fundamental_tutte_tree,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    find_spanning_tree_with_leafset,
    find_tutte_tree,
)

from conftest import complete_graph, cycle_graph, path_graph, random_connected, theta_graph


def _tree_count_kirchhoff(g: Graph) -> int:
    """Matrix-tree theorem: determinant of the reduced Laplacian over exact
    rationals."""
    from fractions import Fraction

    n = g.n
    if n <= 1:
        return 1
    L = [[Fraction(0)] * n for _ in range(n)]
    for u, v in g.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    a = [row[: n - 1] for row in L[: n - 1]]
    m = n - 1
    det = Fraction(1)
    for k in range(m):
        pivot = next((i for i in range(k, m) if a[i][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, m):
            f = a[i][k] / a[k][k]
            for j in range(k, m):
                a[i][j] -= f * a[k][j]
    assert det.denominator == 1
    return abs(int(det))


def test_spanning_tree_counts_match_matrix_tree(rng):
    assert _tree_count_kirchhoff(complete_graph(4)) == 16
    assert _tree_count_kirchhoff(cycle_graph(5)) == 5
    for _ in range(30):
        g = random_connected(rng, rng.randrange(2, 8))
        trees = list(enumerate_spanning_trees(g))
        assert len(trees) == _tree_count_kirchhoff(g)
        assert len({t.edges for t in trees}) == len(trees)
        for t in trees[:5]:
            assert all(g.has_edge(u, v) for u, v in t.edges)


def test_enumerate_spanning_trees_overflow():
    with pytest.raises(SpanningTreeOverflow):
        list(enumerate_spanning_trees(complete_graph(6), cap=100))


def _ham_cycle_brute(g: Graph):
    if g.n < 3:
        return False
    for perm in itertools.permutations(range(1, g.n)):
        cyc = (0,) + perm
        if all(g.has_edge(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


def _ham_path_brute(g: Graph, endpoints=None):
    for perm in itertools.permutations(range(g.n)):
        if endpoints and {perm[0], perm[-1]} != set(endpoints):
            continue
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(g.n - 1)):
            return True
    return False


def test_hamiltonian_searches_match_bruteforce(rng):
    for _ in range(30):
        g = random_connected(rng, rng.randrange(3, 8))
        assert (find_hamiltonian_cycle(g).verdict == HOLDS) == _ham_cycle_brute(g)
        assert (find_hamiltonian_path(g).verdict == HOLDS) == _ham_path_brute(g)
        u, v = 0, g.n - 1
        got = find_hamiltonian_path(g, (u, v))
        assert (got.verdict == HOLDS) == _ham_path_brute(g, (u, v))
        if got.verdict == HOLDS:
            p = got.witness.vertices
            assert {p[0], p[-1]} == {u, v}
            assert all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))
            assert sorted(p) == list(range(g.n))


def test_hamiltonian_path_rejects_identical_anchors():
    with pytest.raises(GraphError):
        find_hamiltonian_path(cycle_graph(4), (1, 1))


def test_budget_yields_inconclusive():
    g = complete_graph(9)
    cert = find_tutte_tree(g, SearchConfig(budget=3))
    assert cert.verdict == INCONCLUSIVE
    assert not cert.stats.exhausted


def test_find_tutte_tree_reverifies(rng):
    for _ in range(25):
        g = random_connected(rng, rng.randrange(3, 8))
        cert = find_tutte_tree(g)
        if cert.verdict == HOLDS:
            t = SpanningTree(g, cert.witness.edges)
            assert verify_tutte_tree(g, t).verdict == HOLDS
        else:
            assert cert.stats.exhausted
            # exhaustive cross-check against plain enumeration
            assert all(
                verify_tutte_tree(g, t).verdict == FAILS
                for t in enumerate_spanning_trees(g)
            )


def test_find_ftt_reverifies(rng):
    for _ in range(25):
        g = random_connected(rng, rng.randrange(3, 8))
        cert = find_fundamental_tutte_tree(g)
        if cert.verdict == HOLDS:
            t = SpanningTree(g, cert.witness.edges)
            assert verify_fundamental_tutte_tree(g, t).verdict == HOLDS
        else:
            assert all(
                verify_fundamental_tutte_tree(g, t).verdict == FAILS
                for t in enumerate_spanning_trees(g)
            )


def test_pruned_equals_unpruned_with_identical_witness(rng):
    for _ in range(40):
        g = random_connected(rng, rng.randrange(3, 8))
        a = find_tutte_tree(g, SearchConfig(prune=True))
        b = find_tutte_tree(g, SearchConfig(prune=False))
        assert a.verdict == b.verdict
        if a.verdict == HOLDS:
            assert a.witness.edges == b.witness.edges
        fa = find_fundamental_tutte_tree(g, SearchConfig(prune=True))
        fb = find_fundamental_tutte_tree(g, SearchConfig(prune=False))
        assert fa.verdict == fb.verdict
        if fa.verdict == HOLDS:
            assert fa.witness.edges == fb.witness.edges


def test_find_spanning_tree_with_leafset():
    g = complete_graph(4)
    cert = find_spanning_tree_with_leafset(g, [1, 2, 3])
    assert cert.verdict == HOLDS
    t = SpanningTree(g, cert.witness.edges)
    assert t.leaves == (1, 2, 3)
    # C4 admits no spanning tree with 3 leaves
    assert find_spanning_tree_with_leafset(cycle_graph(4), [0, 1, 2]).verdict == FAILS
    with pytest.raises(GraphError):
        find_spanning_tree_with_leafset(g, [1])


def test_decide_planar_tutte_matches_search(rng):
    checked = 0
    while checked < 30:
        g = random_connected(rng, rng.randrange(3, 8))
        if not is_planar(g):
            continue
        checked += 1
        dec = decide_planar_tutte(g)
        ref = find_tutte_tree(g)
        assert dec.verdict == ref.verdict
        if dec.verdict == HOLDS:
            t = SpanningTree(g, dec.witness.edges)
            assert verify_tutte_tree(g, t).verdict == HOLDS


def test_decide_planar_tutte_rejects_nonplanar():
    with pytest.raises(GraphError):
        decide_planar_tutte(complete_graph(5))


def test_spg_conditions_known():
    assert check_spg_conditions(cycle_graph(5)).verdict
    assert check_spg_conditions(theta_graph()).verdict
    # generalized theta with three length-3 legs: the 2-cut {0,1} has three
    # bridges and none has a Hamiltonian 0-1 path through the other legs? each
    # leg itself is a Hamiltonian path of its bridge, so conditions hold
    g = Graph(8, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)])
    assert check_spg_conditions(g).verdict
    with pytest.raises(GraphError):
        check_spg_conditions(path_graph(4))  # not 2-connected
    with pytest.raises(GraphError):
        check_spg_conditions(complete_graph(4))  # not series-parallel


def test_spg_conditions_failure_records():
    # four parallel 2-edge paths between hubs 0,1: four bridges at {0,1}
    g = Graph(6, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (0, 5), (5, 1)])
    rep = check_spg_conditions(g)
    assert not rep.verdict
    bad = [r for r in rep.records if not r.cond_i]
    assert bad and bad[0].bridge_count == 4


def test_build_ftt_series_parallel(rng):
    for g in (cycle_graph(6), theta_graph()):
        t = build_ftt_series_parallel(g)
        assert verify_fundamental_tutte_tree(g, t).verdict == HOLDS
    # failing input raises with the violated condition recorded
    g = Graph(6, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (0, 5), (5, 1)])
    with pytest.raises(ConstructionError) as ei:
        build_ftt_series_parallel(g)
    assert ei.value.failed == "i"


def test_build_ftt_block_structured():
    # two triangles sharing a vertex: both blocks are leaves, Hamiltonian,
    # and the shared vertex has degree 2 in each
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    t = build_ftt_block_structured(g)
    assert verify_fundamental_tutte_tree(g, t).verdict == HOLDS
    # triangle with a pendant edge: trivial block stays, triangle is a leaf
    g2 = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    t2 = build_ftt_block_structured(g2)
    assert verify_fundamental_tutte_tree(g2, t2).verdict == HOLDS
    # K4 with a pendant: articulation vertex has degree 3 in its block
    g3 = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
    with pytest.raises(ConstructionError) as ei:
        build_ftt_block_structured(g3)
    assert ei.value.failed == "iii"
    # path of three triangles: middle nontrivial block is not a leaf
    g4 = Graph(
        7,
        [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6)],
    )
    with pytest.raises(ConstructionError) as ei:
        build_ftt_block_structured(g4)
    assert ei.value.failed == "i"
