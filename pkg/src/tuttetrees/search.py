"""Exact searches: Hamiltonian cycles/paths, spanning-tree enumeration with
incremental pruning, the planar decision procedure, and the two polynomial
fundamental-tree constructors.

The tree searches grow a connected partial tree from vertex 0 by canonical
frontier edges (include/exclude branching), so every spanning tree is visited
exactly once and any path or fundamental cycle already fixed inside the partial
tree persists in every completion -- which is what makes early pruning sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from .graph import Graph, GraphError, SpanningTree, connected_mask, mask_vertices
from .nonsep import (
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    Certificate,
    SearchStats,
    WitnessCycle,
    WitnessPath,
    WitnessTree,
    verify_fundamental_tutte_tree,
)
from .structure import (
    block_cut_tree,
    bridge_graph,
    connectivity_at_least,
    cut_edges,
    h_bridges,
    is_series_parallel,
    two_vertex_cuts,
)


@dataclass(frozen=True)
class SearchConfig:
    budget: int = 0  # node budget; 0 = unlimited
    vertex_order: str = "ascending"  # or "degree-descending" (Hamiltonian searches)
    record_stats: bool = True
    prune: bool = True

    def __post_init__(self):
        if self.budget < 0:
            raise GraphError("budget must be nonnegative")
        if self.vertex_order not in ("ascending", "degree-descending"):
            raise GraphError(f"unknown vertex order {self.vertex_order!r}")


DEFAULT_CONFIG = SearchConfig()


class BudgetExceeded(Exception):
    pass


# ---------------------------------------------------------------------------
# Hamiltonian search
# ---------------------------------------------------------------------------


class _HamSearch:
    def __init__(self, g: Graph, cfg: SearchConfig):
        self.g = g
        self.cfg = cfg
        self.nodes = 0
        if cfg.vertex_order == "degree-descending":
            self.order = {
                v: tuple(sorted(g.adj[v], key=lambda w: (-len(g.adj[w]), w)))
                for v in range(g.n)
            }
        else:
            self.order = {v: g.adj[v] for v in range(g.n)}

    def _tick(self):
        self.nodes += 1
        if self.cfg.budget and self.nodes > self.cfg.budget:
            raise BudgetExceeded

    def cycle(self) -> Optional[list[int]]:
        g = self.g
        if g.n < 3:
            raise GraphError("a Hamiltonian cycle needs at least 3 vertices")
        path = [0]
        return self._cycle_rec(path, 1)

    def _cycle_rec(self, path: list[int], visited: int) -> Optional[list[int]]:
        self._tick()
        g = self.g
        cur = path[-1]
        if len(path) == g.n:
            return path[:] if g.has_edge(cur, 0) else None
        unvisited = g.full_mask & ~visited
        # every unvisited vertex still needs 2 usable neighbors
        usable = unvisited | (1 << cur) | 1
        rem = unvisited
        while rem:
            b = rem & -rem
            v = b.bit_length() - 1
            a = g.adj_mask[v] & usable
            if a == 0 or a == (a & -a):
                return None
            rem ^= b
        if not connected_mask(g, unvisited | (1 << cur)):
            return None
        for w in self.order[cur]:
            if not (visited >> w) & 1:
                path.append(w)
                res = self._cycle_rec(path, visited | (1 << w))
                if res is not None:
                    return res
                path.pop()
        return None

    def path(self, endpoints: Optional[Sequence[int]]) -> Optional[list[int]]:
        g = self.g
        if g.n < 1:
            raise GraphError("a Hamiltonian path needs at least one vertex")
        if g.n == 1:
            if endpoints and any(v != 0 for v in endpoints):
                raise GraphError("anchor out of range")
            return [0]
        if endpoints:
            for v in endpoints:
                if not 0 <= v < g.n:
                    raise GraphError(f"anchor {v} out of range")
            if len(endpoints) == 2 and endpoints[0] == endpoints[1]:
                raise GraphError("identical anchors")
        if endpoints and len(endpoints) == 2:
            u, v = endpoints
            return self._path_rec([u], 1 << u, v)
        if endpoints and len(endpoints) == 1:
            return self._path_rec([endpoints[0]], 1 << endpoints[0], None)
        for s in range(g.n):
            res = self._path_rec([s], 1 << s, None)
            if res is not None:
                return res
        return None

    def _path_rec(self, path: list[int], visited: int, target: Optional[int]) -> Optional[list[int]]:
        self._tick()
        g = self.g
        cur = path[-1]
        if len(path) == g.n:
            if target is None or cur == target:
                return path[:]
            return None
        unvisited = g.full_mask & ~visited
        if not connected_mask(g, unvisited | (1 << cur)):
            return None
        usable = unvisited | (1 << cur)
        deficient = 0
        rem = unvisited
        while rem:
            b = rem & -rem
            v = b.bit_length() - 1
            a = g.adj_mask[v] & usable
            if a == 0:
                return None
            if a == (a & -a):  # only one usable neighbor: must be a path end
                if target is not None and v != target:
                    return None
                deficient += 1
                if deficient > 1:
                    return None
            rem ^= b
        for w in self.order[cur]:
            if not (visited >> w) & 1:
                if target is not None and w == target and len(path) + 1 < g.n:
                    continue
                path.append(w)
                res = self._path_rec(path, visited | (1 << w), target)
                if res is not None:
                    return res
                path.pop()
        return None


def _stats(search_nodes: int, trees: int = 0, prunes: int = 0, exhausted: bool = False) -> SearchStats:
    return SearchStats(nodes=search_nodes, trees=trees, prunes=prunes, exhausted=exhausted)


def find_hamiltonian_cycle(g: Graph, cfg: SearchConfig = DEFAULT_CONFIG) -> Certificate:
    """Backtracking Hamiltonian cycle search with connectivity/degree pruning."""
    s = _HamSearch(g, cfg)
    try:
        res = s.cycle()
    except BudgetExceeded:
        return Certificate(INCONCLUSIVE, None, _stats(s.nodes))
    if res is None:
        return Certificate(FAILS, None, _stats(s.nodes, exhausted=True))
    return Certificate(HOLDS, WitnessCycle(tuple(res)), _stats(s.nodes))


def find_hamiltonian_path(
    g: Graph,
    endpoints: Optional[Sequence[int]] = None,
    cfg: SearchConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Hamiltonian path search; `endpoints` may fix one anchor or both ends."""
    if g.n < 2:
        raise GraphError("a Hamiltonian path needs at least 2 vertices")
    s = _HamSearch(g, cfg)
    try:
        res = s.path(endpoints)
    except BudgetExceeded:
        return Certificate(INCONCLUSIVE, None, _stats(s.nodes))
    if res is None:
        return Certificate(FAILS, None, _stats(s.nodes, exhausted=True))
    return Certificate(HOLDS, WitnessPath(tuple(res)), _stats(s.nodes))


# ---------------------------------------------------------------------------
# Spanning tree enumeration engine
# ---------------------------------------------------------------------------


class _TreeSearch:
    """Include/exclude enumeration of spanning trees in canonical edge order.

    `on_join(v, u)` runs when v joins the partial tree via tree edge (u,v) and
    may veto the branch; `on_complete()` runs per full tree and may return a
    final result to stop the search.
    """

    def __init__(self, g: Graph, budget: int = 0):
        if g.n == 0:
            raise GraphError("cannot enumerate spanning trees of the null graph")
        self.g = g
        self.budget = budget
        self.nodes = 0
        self.trees = 0
        self.prunes = 0
        self.parent = [-1] * g.n
        self.depth = [0] * g.n
        self.tree_deg = [0] * g.n
        self.in_tree = 1
        self.tree_edges: list[tuple[int, int]] = []
        self.excl_adj = [0] * g.n  # masks of excluded neighbor edges
        self.on_join: Optional[Callable[[int, int], bool]] = None
        self.on_complete: Optional[Callable[[], object]] = None
        self.on_root: Optional[Callable[[], bool]] = None

    def path_mask(self, u: int, v: int) -> int:
        parent, depth = self.parent, self.depth
        m = (1 << u) | (1 << v)
        x, y = u, v
        while depth[x] > depth[y]:
            x = parent[x]
            m |= 1 << x
        while depth[y] > depth[x]:
            y = parent[y]
            m |= 1 << y
        while x != y:
            x = parent[x]
            y = parent[y]
            m |= (1 << x) | (1 << y)
        return m

    def path_vertices(self, u: int, v: int) -> tuple[int, ...]:
        parent, depth = self.parent, self.depth
        left, right = [u], [v]
        x, y = u, v
        while depth[x] > depth[y]:
            x = parent[x]
            left.append(x)
        while depth[y] > depth[x]:
            y = parent[y]
            right.append(y)
        while x != y:
            x = parent[x]
            y = parent[y]
            left.append(x)
            right.append(y)
        right.pop()
        return tuple(left + right[::-1])

    def _spannable(self) -> bool:
        g = self.g
        reach = self.in_tree
        frontier = reach
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                v = b.bit_length() - 1
                nxt |= g.adj_mask[v] & ~self.excl_adj[v]
                f ^= b
            frontier = nxt & ~reach
            reach |= frontier
        return reach == g.full_mask

    def run(self):
        if self.g.n == 1:
            self.trees += 1
            return self.on_complete() if self.on_complete else None
        if self.on_root is not None and not self.on_root():
            self.prunes += 1
            return None
        return self._rec()

    def _rec(self):
        self.nodes += 1
        if self.budget and self.nodes > self.budget:
            raise BudgetExceeded
        g = self.g
        in_tree = self.in_tree
        if in_tree == g.full_mask:
            self.trees += 1
            return self.on_complete() if self.on_complete else None
        edge = None
        for a, b in g.edges:
            ain = (in_tree >> a) & 1
            if ain == (in_tree >> b) & 1:
                continue
            if (self.excl_adj[a] >> b) & 1:
                continue
            edge = (a, b)
            u, v = (a, b) if ain else (b, a)
            break
        if edge is None:
            return None
        a, b = edge
        # include branch
        self.parent[v] = u
        self.depth[v] = self.depth[u] + 1
        self.tree_deg[u] += 1
        self.tree_deg[v] = 1
        self.in_tree |= 1 << v
        self.tree_edges.append(edge)
        ok = self.on_join(v, u) if self.on_join is not None else True
        if ok:
            res = self._rec()
            if res is not None:
                return res
        else:
            self.prunes += 1
        self.tree_edges.pop()
        self.in_tree = in_tree
        self.tree_deg[u] -= 1
        self.tree_deg[v] = 0
        self.parent[v] = -1
        # exclude branch
        self.excl_adj[a] |= 1 << b
        self.excl_adj[b] |= 1 << a
        res = None
        if self._spannable():
            res = self._rec()
        self.excl_adj[a] &= ~(1 << b)
        self.excl_adj[b] &= ~(1 << a)
        return res

    def stats(self, exhausted: bool) -> SearchStats:
        return SearchStats(
            nodes=self.nodes, trees=self.trees, prunes=self.prunes, exhausted=exhausted
        )


def enumerate_spanning_trees(g: Graph, cap: int = 10**7) -> Iterator[SpanningTree]:
    """Yield every spanning tree exactly once, in canonical edge order.

    Raises SpanningTreeOverflow when more than `cap` trees exist.
    """
    if not connected_mask(g, g.full_mask):
        raise GraphError("spanning trees require a connected graph")
    stack_results: list[tuple[tuple[int, int], ...]] = []
    search = _TreeSearch(g)
    count = [0]

    def on_complete():
        count[0] += 1
        if count[0] > cap:
            raise SpanningTreeOverflow(cap)
        stack_results.append(tuple(search.tree_edges))
        return None

    search.on_complete = on_complete

    def gen():
        search.run()
        for edges in stack_results:
            yield SpanningTree(g, edges)

    return gen()


class SpanningTreeOverflow(Exception):
    def __init__(self, cap: int):
        super().__init__(f"spanning tree enumeration exceeded cap {cap}")
        self.cap = cap


# ---------------------------------------------------------------------------
# Tutte tree and fundamental Tutte tree searches
# ---------------------------------------------------------------------------


def find_tutte_tree(g: Graph, cfg: SearchConfig = DEFAULT_CONFIG) -> Certificate:
    """Exhaustive branch-and-bound for a spanning tree all of whose paths are
    nonseparating.  A partial tree is pruned as soon as it contains a
    separating path: tree paths persist under extension."""
    if g.n < 3:
        raise GraphError("Tutte tree search needs at least 3 vertices")
    if not connected_mask(g, g.full_mask):
        return Certificate(FAILS, None, SearchStats(exhausted=True))
    s = _TreeSearch(g, budget=cfg.budget)
    full = g.full_mask

    if cfg.prune:
        def on_root() -> bool:
            return connected_mask(g, full & ~1)

        def on_join(v: int, u: int) -> bool:
            if not connected_mask(g, full & ~(1 << v)):
                return False
            rem = s.in_tree & ~(1 << v)
            while rem:
                b = rem & -rem
                w = b.bit_length() - 1
                if not connected_mask(g, full & ~s.path_mask(v, w)):
                    return False
                rem ^= b
            return True

        def on_complete():
            # all paths were checked incrementally
            return Certificate(HOLDS, WitnessTree(tuple(sorted(s.tree_edges))))

        s.on_root = on_root
        s.on_join = on_join
        s.on_complete = on_complete
    else:
        def on_complete():
            if _partial_tree_is_tutte(g, s):
                return Certificate(HOLDS, WitnessTree(tuple(sorted(s.tree_edges))))
            return None

        s.on_complete = on_complete

    try:
        res = s.run()
    except BudgetExceeded:
        return Certificate(INCONCLUSIVE, None, s.stats(False))
    if res is None:
        return Certificate(FAILS, None, s.stats(True))
    return Certificate(res.verdict, res.witness, s.stats(False))


def _partial_tree_is_tutte(g: Graph, s: _TreeSearch) -> bool:
    full = g.full_mask
    for u in range(g.n):
        for v in range(u, g.n):
            if not connected_mask(g, full & ~s.path_mask(u, v)):
                return False
    return True


def find_fundamental_tutte_tree(g: Graph, cfg: SearchConfig = DEFAULT_CONFIG) -> Certificate:
    """Exhaustive search for a spanning tree whose fundamental cycles are all
    nonseparating.  When a vertex joins the partial tree, the fundamental
    cycles of its back edges are fixed forever and checked immediately."""
    if g.n < 1:
        raise GraphError("search needs at least one vertex")
    if not connected_mask(g, g.full_mask):
        return Certificate(FAILS, None, SearchStats(exhausted=True))
    if g.n == 1:
        return Certificate(HOLDS, WitnessTree(()), SearchStats(trees=1))
    s = _TreeSearch(g, budget=cfg.budget)
    full = g.full_mask

    if cfg.prune:
        def on_join(v: int, u: int) -> bool:
            back = g.adj_mask[v] & s.in_tree & ~(1 << u)
            while back:
                b = back & -back
                w = b.bit_length() - 1
                if not connected_mask(g, full & ~s.path_mask(v, w)):
                    return False
                back ^= b
            return True

        def on_complete():
            return Certificate(HOLDS, WitnessTree(tuple(sorted(s.tree_edges))))

        s.on_join = on_join
        s.on_complete = on_complete
    else:
        def on_complete():
            for a, b in g.edges:
                if s.parent[a] == b or s.parent[b] == a:
                    continue
                if not connected_mask(g, full & ~s.path_mask(a, b)):
                    return None
            return Certificate(HOLDS, WitnessTree(tuple(sorted(s.tree_edges))))

        s.on_complete = on_complete

    try:
        res = s.run()
    except BudgetExceeded:
        return Certificate(INCONCLUSIVE, None, s.stats(False))
    if res is None:
        return Certificate(FAILS, None, s.stats(True))
    return Certificate(res.verdict, res.witness, s.stats(False))


def find_spanning_tree_with_leafset(
    g: Graph, leaves: Sequence[int] | int, cfg: SearchConfig = DEFAULT_CONFIG
) -> Certificate:
    """A spanning tree whose leaf set equals `leaves` exactly."""
    leaf_mask = leaves if isinstance(leaves, int) else sum(1 << v for v in set(leaves))
    if leaf_mask & ~g.full_mask:
        raise GraphError("leaves must be a subset of the vertices")
    k = bin(leaf_mask).count("1")
    if k < 2:
        raise GraphError("a tree with at least 2 vertices has at least 2 leaves")
    if not connected_mask(g, g.full_mask):
        return Certificate(FAILS, None, SearchStats(exhausted=True))
    s = _TreeSearch(g, budget=cfg.budget)

    def on_join(v: int, u: int) -> bool:
        # a designated leaf must never gain tree-degree 2
        return not ((leaf_mask >> u) & 1 and s.tree_deg[u] >= 2)

    def on_complete():
        lm = 0
        for x in range(g.n):
            if s.tree_deg[x] == 1:
                lm |= 1 << x
        if lm == leaf_mask:
            return Certificate(HOLDS, WitnessTree(tuple(sorted(s.tree_edges))))
        return None

    s.on_join = on_join
    s.on_complete = on_complete
    try:
        res = s.run()
    except BudgetExceeded:
        return Certificate(INCONCLUSIVE, None, s.stats(False))
    if res is None:
        return Certificate(FAILS, None, s.stats(True))
    return Certificate(res.verdict, res.witness, s.stats(False))


# ---------------------------------------------------------------------------
# Planar decision procedure
# ---------------------------------------------------------------------------


def _triangles(g: Graph) -> Iterator[tuple[int, int, int]]:
    for u in range(g.n):
        for v in g.adj[u]:
            if v <= u:
                continue
            both = g.adj_mask[u] & g.adj_mask[v]
            for w in mask_vertices(both):
                if w > v:
                    yield (u, v, w)


def decide_planar_tutte(g: Graph, cfg: SearchConfig = DEFAULT_CONFIG) -> Certificate:
    """Planar characterization: a Tutte tree exists iff the graph is Hamiltonian
    or has a spanning tree whose leaves induce a triangle.  On holds, the
    witness is a Tutte tree built accordingly (cycle minus an edge, or the
    triangle-leaf tree)."""
    from .planar import is_planar

    if g.n < 3:
        raise GraphError("decision procedure needs at least 3 vertices")
    if not is_planar(g):
        raise GraphError("decide_planar_tutte requires a planar graph")
    ham = find_hamiltonian_cycle(g, cfg)
    if ham.verdict == INCONCLUSIVE:
        return Certificate(INCONCLUSIVE, None, ham.stats)
    if ham.verdict == HOLDS:
        cyc = ham.witness.vertices
        edges = sorted((a, b) if a < b else (b, a) for a, b in zip(cyc, cyc[1:]))
        return Certificate(HOLDS, WitnessTree(tuple(edges)), ham.stats)
    for tri in _triangles(g):
        res = find_spanning_tree_with_leafset(g, tri, cfg)
        if res.verdict != FAILS:
            return res
    return Certificate(FAILS, None, SearchStats(exhausted=True))


# ---------------------------------------------------------------------------
# Series-parallel conditions and constructors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CutRecord:
    cut: tuple[int, int]
    bridge_count: int
    ham_uv_path: tuple[bool, ...]
    two_edge_connected: tuple[bool, ...]
    cond_i: bool
    cond_ii: bool
    cond_iii: bool

    @property
    def verdict(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii


@dataclass(frozen=True)
class SpgReport:
    records: tuple[CutRecord, ...]
    verdict: bool


def _bridge_is_2ec(bg: Graph) -> bool:
    if bg.n < 3:
        return False
    return connected_mask(bg, bg.full_mask) and not cut_edges(bg)


def _bridge_ham_uv_path(g: Graph, b, u: int, v: int) -> Optional[list[int]]:
    bg, index = bridge_graph(g, b)
    res = find_hamiltonian_path(bg, (index[u], index[v]))
    if res.verdict != HOLDS:
        return None
    back = {i: orig for orig, i in index.items()}
    return [back[x] for x in res.witness.vertices]


def check_spg_conditions(g: Graph) -> SpgReport:
    """Evaluate the three fundamental-tree conditions at every 2-vertex cut of a
    2-connected series-parallel graph."""
    if not connectivity_at_least(g, 2):
        raise GraphError("check_spg_conditions requires a 2-connected graph")
    if not is_series_parallel(g):
        raise GraphError("check_spg_conditions requires a series-parallel graph")
    records = []
    for u, v in two_vertex_cuts(g):
        dec = h_bridges(g, [u, v])
        hams = []
        tecs = []
        for b in dec.bridges:
            bg, _ = bridge_graph(g, b)
            hams.append(_bridge_ham_uv_path(g, b, u, v) is not None)
            tecs.append(_bridge_is_2ec(bg))
        k = len(dec.bridges)
        cond_i = k <= 3
        cond_ii = k != 2 or any(hams)
        cond_iii = k != 3 or (all(hams) and sum(tecs) <= 1)
        records.append(
            CutRecord(
                cut=(u, v),
                bridge_count=k,
                ham_uv_path=tuple(hams),
                two_edge_connected=tuple(tecs),
                cond_i=cond_i,
                cond_ii=cond_ii,
                cond_iii=cond_iii,
            )
        )
    return SpgReport(records=tuple(records), verdict=all(r.verdict for r in records))


class ConstructionError(GraphError):
    """A constructor's precondition failed; `failed` names the condition."""

    def __init__(self, message: str, failed: Optional[str] = None):
        super().__init__(message)
        self.failed = failed


def build_ftt_series_parallel(g: Graph) -> SpanningTree:
    """Constructive fundamental Tutte tree for a qualifying 2-connected
    series-parallel graph: Hamiltonian cycle minus an edge when every cut has
    two bridges, otherwise per-bridge Hamiltonian uv-paths minus one cut edge
    in each of two non-2-edge-connected bridges."""
    report = check_spg_conditions(g)
    if not report.verdict:
        bad = next(r for r in report.records if not (r.cond_i and r.cond_ii and r.cond_iii))
        which = "i" if not bad.cond_i else ("ii" if not bad.cond_ii else "iii")
        raise ConstructionError(
            f"graph fails 2-cut bridge condition ({which}) at cut {bad.cut}", which
        )
    three = next((r for r in report.records if r.bridge_count == 3), None)
    if three is None:
        ham = find_hamiltonian_cycle(g)
        if ham.verdict != HOLDS:
            raise ConstructionError("expected a Hamiltonian cycle in the two-bridge case")
        cyc = ham.witness.vertices
        edges = [(a, b) if a < b else (b, a) for a, b in zip(cyc, cyc[1:])]
        tree = SpanningTree(g, edges)
    else:
        u, v = three.cut
        dec = h_bridges(g, [u, v])
        paths = [_bridge_ham_uv_path(g, b, u, v) for b in dec.bridges]
        if any(p is None for p in paths):
            raise ConstructionError("bridge lost its Hamiltonian uv-path")
        bgs = [bridge_graph(g, b) for b in dec.bridges]
        non2ec = [i for i, (bg, _) in enumerate(bgs) if not _bridge_is_2ec(bg)]
        cut_idx = non2ec[:2]  # >=2 exist: at most one bridge is 2-edge-connected
        removed = set()
        for i in cut_idx:
            bg, index = bgs[i]
            back = {x: orig for orig, x in index.items()}
            bcuts = {
                tuple(sorted((back[a], back[b]))) for a, b in cut_edges(bg)
            }
            path = paths[i]
            on_path = [
                tuple(sorted(e)) for e in zip(path, path[1:]) if tuple(sorted(e)) in bcuts
            ]
            removed.add(on_path[0])
        edges = set()
        for p in paths:
            for e in zip(p, p[1:]):
                edges.add(tuple(sorted(e)))
        tree = SpanningTree(g, sorted(edges - removed))
    check = verify_fundamental_tutte_tree(g, tree)
    if check.verdict != HOLDS:
        raise ConstructionError("constructed tree failed re-verification")
    return tree


def build_ftt_block_structured(g: Graph) -> SpanningTree:
    """Constructive fundamental Tutte tree for a graph with a cut vertex whose
    nontrivial blocks are Hamiltonian block-tree leaves with degree-2
    articulation vertices."""
    bct = block_cut_tree(g)
    if not bct.cut_vertices:
        raise ConstructionError("graph has no cut vertex")
    edges: set[tuple[int, int]] = set()
    cut_set = set(bct.cut_vertices)
    for blk, cuts in zip(bct.blocks, bct.block_cuts):
        if not blk.nontrivial:
            edges.update(blk.edges)
            continue
        if not blk.is_leaf:
            raise ConstructionError(
                f"nontrivial block {blk.vertices} is not a block-tree leaf", failed="i"
            )
        art = cuts[0]
        index = {x: i for i, x in enumerate(blk.vertices)}
        bg = Graph(len(blk.vertices), [(index[a], index[b]) for a, b in blk.edges])
        if bg.degree(index[art]) != 2:
            raise ConstructionError(
                f"articulation vertex {art} has degree {bg.degree(index[art])} in its block",
                failed="iii",
            )
        ham = find_hamiltonian_cycle(bg)
        if ham.verdict != HOLDS:
            raise ConstructionError(
                f"nontrivial block {blk.vertices} is not Hamiltonian", failed="ii"
            )
        cyc = list(ham.witness.vertices)
        pos = cyc.index(index[art])
        cyc = cyc[pos:] + cyc[:pos]  # articulation vertex first; drop its closing edge
        back = {i: x for x, i in index.items()}
        for a, b in zip(cyc, cyc[1:]):
            edges.add(tuple(sorted((back[a], back[b]))))
    tree = SpanningTree(g, sorted(edges))
    check = verify_fundamental_tutte_tree(g, tree)
    if check.verdict != HOLDS:
        raise ConstructionError("constructed tree failed re-verification")
    return tree
