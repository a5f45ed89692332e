"""Structural predicates: connectivity grades, cut edges, blocks, bridges, 2-cuts,
series-parallel recognition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, connected_mask, is_connected, mask_of, mask_vertices


def connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff |V| > k and removing any < k vertices leaves a connected graph.

    Subset enumeration; extensionally matches the flow-based definition for k <= 4.
    """
    if k not in (1, 2, 3, 4):
        raise GraphError(f"k={k} outside supported range 1..4")
    if g.n <= k:
        return False
    full = g.full_mask
    for size in range(k):
        for sub in combinations(range(g.n), size):
            if not connected_mask(g, full & ~mask_of(sub)):
                return False
    return True


def cut_edges(g: Graph) -> tuple[tuple[int, int], ...]:
    """Edges whose removal disconnects the graph (brute-force removal)."""
    if not is_connected(g):
        raise GraphError("cut_edges requires a connected graph")
    out = []
    for u, v in g.edges:
        if not _connected_without_edge(g, u, v):
            out.append((u, v))
    return tuple(out)


def _connected_without_edge(g: Graph, eu: int, ev: int) -> bool:
    mask = g.full_mask
    if mask == 0:
        return True
    adj = g.adj_mask
    reach = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            v = b.bit_length() - 1
            a = adj[v]
            if v == eu:
                a &= ~(1 << ev)
            elif v == ev:
                a &= ~(1 << eu)
            nxt |= a
            f ^= b
        frontier = nxt & mask & ~reach
        reach |= frontier
    return reach == mask


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    nontrivial: bool  # >= 3 vertices
    is_leaf: bool  # leaf of the block-cut tree


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[Block, ...]
    cut_vertices: tuple[int, ...]
    # adjacency of the bipartite tree: block index -> cut vertices it contains
    block_cuts: tuple[tuple[int, ...], ...]


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Blocks (maximal 2-connected subgraphs or bridge edges) and cut vertices."""
    if g.n < 1:
        raise GraphError("block_cut_tree requires at least one vertex")
    if not is_connected(g):
        raise GraphError("block_cut_tree requires a connected graph")
    import sys

    n = g.n
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    edge_stack: list[tuple[int, int]] = []
    blocks_edges: list[list[tuple[int, int]]] = []
    timer = [0]

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n + 100))

    def dfs(v: int, parent: int) -> None:
        disc[v] = low[v] = timer[0]
        timer[0] += 1
        children = 0
        for w in g.adj[v]:
            if w == parent:
                continue
            if disc[w] == -1:
                children += 1
                edge_stack.append((v, w))
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if (parent != -1 and low[w] >= disc[v]) or (parent == -1 and children > 1):
                    is_cut[v] = True
                if low[w] >= disc[v]:
                    blk = []
                    while edge_stack[-1] != (v, w):
                        blk.append(edge_stack.pop())
                    blk.append(edge_stack.pop())
                    blocks_edges.append(blk)
            elif disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])

    try:
        dfs(0, -1)
    finally:
        sys.setrecursionlimit(old_limit)

    blocks: list[Block] = []
    cut_set = {v for v in range(n) if is_cut[v]}
    for blk in blocks_edges:
        vs = sorted({x for e in blk for x in e})
        es = tuple(sorted((a, b) if a < b else (b, a) for a, b in blk))
        cuts_in = tuple(v for v in vs if v in cut_set)
        blocks.append(
            Block(
                vertices=tuple(vs),
                edges=es,
                nontrivial=len(vs) >= 3,
                is_leaf=len(cuts_in) <= 1,
            )
        )
    if not blocks:  # single-vertex graph
        blocks.append(Block(vertices=(0,), edges=(), nontrivial=False, is_leaf=True))
    blocks.sort(key=lambda b: b.vertices)
    return BlockCutTree(
        blocks=tuple(blocks),
        cut_vertices=tuple(sorted(cut_set)),
        block_cuts=tuple(
            tuple(v for v in b.vertices if v in cut_set) for b in blocks
        ),
    )


@dataclass(frozen=True)
class HBridge:
    vertices: tuple[int, ...]  # internal vertices plus attachments
    attachments: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    trivial: bool


@dataclass(frozen=True)
class BridgeDecomposition:
    host: Graph
    h_vertices: tuple[int, ...]
    bridges: tuple[HBridge, ...]


def h_bridges(g: Graph, h: int | list[int] | tuple[int, ...] | set[int]) -> BridgeDecomposition:
    """The H-bridges for a vertex set H: one bridge per component of G-H, plus,
    when |H| = 2 exactly, a trivial bridge for an edge between the two vertices.

    Edges induced inside larger H count as H-edges, not bridges; the 2-set case
    follows the 2-cut usage where the edge uv is its own trivial bridge.
    """
    hmask = h if isinstance(h, int) else mask_of(h)
    if hmask & ~g.full_mask:
        raise GraphError("H is not a subset of the vertices")
    hverts = mask_vertices(hmask)
    rest = g.full_mask & ~hmask
    bridges: list[HBridge] = []

    seen = 0
    while rest & ~seen:
        start = (rest & ~seen) & -(rest & ~seen)
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= g.adj_mask[b.bit_length() - 1]
                f ^= b
            frontier = nxt & rest & ~comp
            comp |= frontier
        seen |= comp
        attach = 0
        edges = []
        for v in mask_vertices(comp):
            for w in g.adj[v]:
                if (comp >> w) & 1:
                    if v < w:
                        edges.append((v, w))
                else:  # attachment edge into H
                    attach |= 1 << w
                    edges.append((v, w) if v < w else (w, v))
        bridges.append(
            HBridge(
                vertices=tuple(mask_vertices(comp | attach)),
                attachments=tuple(mask_vertices(attach)),
                edges=tuple(sorted(edges)),
                trivial=False,
            )
        )
    if len(hverts) == 2:
        u, v = hverts
        if g.has_edge(u, v):
            bridges.append(
                HBridge(
                    vertices=(u, v),
                    attachments=(u, v),
                    edges=((u, v),),
                    trivial=True,
                )
            )
    bridges.sort(key=lambda b: b.vertices)
    return BridgeDecomposition(host=g, h_vertices=tuple(hverts), bridges=tuple(bridges))


def bridge_graph(g: Graph, b: HBridge) -> tuple[Graph, dict[int, int]]:
    """The bridge as a standalone graph; returns it with an original->local id map."""
    index = {v: i for i, v in enumerate(b.vertices)}
    edges = [(index[u], index[v]) for u, v in b.edges]
    return Graph(len(b.vertices), edges), index


def two_vertex_cuts(g: Graph) -> tuple[tuple[int, int], ...]:
    """All pairs {u,v} whose removal disconnects the graph, in lexicographic order."""
    if not is_connected(g):
        raise GraphError("two_vertex_cuts requires a connected graph")
    if g.n < 3:
        raise GraphError("two_vertex_cuts requires at least 3 vertices")
    full = g.full_mask
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not connected_mask(g, full & ~((1 << u) | (1 << v))):
                out.append((u, v))
    return tuple(out)


def _sp_reduce_block(vertices: list[int], edges: list[tuple[int, int]]) -> bool:
    """Reduce a 2-connected block (as a multigraph) by parallel merges and
    degree-2 suppression; series-parallel iff it collapses to K2."""
    # adjacency as multiset counts
    from collections import Counter, defaultdict

    cnt: Counter = Counter()
    deg: Counter = Counter()
    nbrs: defaultdict = defaultdict(set)
    for u, v in edges:
        key = (u, v) if u < v else (v, u)
        cnt[key] += 1
        deg[u] += 1
        deg[v] += 1
        nbrs[u].add(v)
        nbrs[v].add(u)
    alive = set(vertices)

    def merge_parallel(a, b):
        key = (a, b) if a < b else (b, a)
        if cnt[key] > 1:
            deg[a] -= cnt[key] - 1
            deg[b] -= cnt[key] - 1
            cnt[key] = 1
            return True
        return False

    changed = True
    while changed:
        changed = False
        for key in [k for k, c in cnt.items() if c > 1]:
            if merge_parallel(*key):
                changed = True
        for v in list(alive):
            if deg[v] == 2 and len(alive) > 2:
                ns = [w for w in nbrs[v] if cnt[(v, w) if v < w else (w, v)] > 0]
                if len(ns) == 1:
                    continue  # double edge to one neighbor; parallel merge handles it
                a, b = ns
                for w in (a, b):
                    k = (v, w) if v < w else (w, v)
                    cnt[k] -= 1
                key = (a, b) if a < b else (b, a)
                cnt[key] += 1
                nbrs[a].add(b)
                nbrs[b].add(a)
                deg[v] = 0
                alive.discard(v)
                changed = True
    live_edges = sum(c for c in cnt.values())
    return len(alive) == 2 and live_edges == 1


def is_series_parallel(g: Graph) -> bool:
    """True iff the graph has no K4 minor; decided by reducing each block to K2
    under degree-2 suppression and parallel merging."""
    if not is_connected(g):
        raise GraphError("is_series_parallel requires a connected graph")
    if g.n <= 2:
        return True
    bct = block_cut_tree(g)
    for blk in bct.blocks:
        if len(blk.vertices) <= 2:
            continue
        if not _sp_reduce_block(list(blk.vertices), list(blk.edges)):
            return False
    return True
