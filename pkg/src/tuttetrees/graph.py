"""Immutable simple-graph substrate: graphs, vertex sets, spanning trees, tree paths.

Vertices are dense integers 0..n-1.  Vertex sets travel as int bitmasks so the
search inner loops can test connectivity with word operations.  The null graph
(n=0) and the one-vertex graph count as connected; this convention is applied
everywhere a path removal can consume the whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised on malformed graph construction or invalid arguments."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "m", "adj", "adj_mask", "edges", "full_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has an out-of-range endpoint")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.m = len(seen)
        self.adj = tuple(tuple(sorted(s)) for s in adj)
        self.adj_mask = tuple(mask_of(s) for s in adj)
        self.edges = tuple(sorted(seen))
        self.full_mask = (1 << n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and (self.adj_mask[u] >> v) & 1 == 1

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a graph, rejecting loops, duplicates and bad endpoints."""
    return Graph(n, edges)


def connected_mask(g: Graph, mask: int) -> bool:
    """True iff the subgraph induced by the bitmask `mask` is connected.

    The empty mask counts as connected (null-graph convention).
    """
    if mask == 0:
        return True
    adj_mask = g.adj_mask
    start = mask & -mask
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj_mask[b.bit_length() - 1]
            f ^= b
        frontier = nxt & mask & ~reach
        reach |= frontier
    return reach == mask


def is_connected(g: Graph) -> bool:
    """Connectivity with the convention that the null and trivial graphs are connected."""
    return connected_mask(g, g.full_mask)


@dataclass(frozen=True)
class InducedSubgraph:
    """Result of a vertex deletion: the induced graph plus a map to original ids."""

    graph: Graph
    orig: tuple[int, ...]  # orig[i] = original id of new vertex i


def delete_vertices(g: Graph, s: Iterable[int] | int) -> InducedSubgraph:
    """Induced subgraph on the complement of `s` (vertex ids or a bitmask)."""
    smask = s if isinstance(s, int) else mask_of(s)
    if smask & ~g.full_mask:
        raise GraphError("deleted set contains vertices outside the graph")
    keep = [v for v in range(g.n) if not (smask >> v) & 1]
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for (u, v) in g.edges
        if not (smask >> u) & 1 and not (smask >> v) & 1
    ]
    return InducedSubgraph(Graph(len(keep), edges), tuple(keep))


@dataclass(frozen=True)
class TreePath:
    """A path along tree edges; single-vertex paths are allowed (k=0)."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise GraphError("a tree path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("a path has no repeated vertices")

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def reversed(self) -> "TreePath":
        return TreePath(tuple(reversed(self.vertices)))


class SpanningTree:
    """A spanning tree of a host graph, rooted at vertex 0 for path queries."""

    __slots__ = ("host", "edges", "parent", "depth", "tree_adj_mask", "leaf_mask")

    def __init__(self, host: Graph, edges: Iterable[tuple[int, int]]):
        n = host.n
        es = tuple(sorted((u, v) if u < v else (v, u) for u, v in edges))
        if len(set(es)) != len(es):
            raise GraphError("duplicate tree edge")
        if len(es) != n - 1:
            raise GraphError(f"a spanning tree of {n} vertices needs {n-1} edges, got {len(es)}")
        tadj = [0] * n
        for u, v in es:
            if not host.has_edge(u, v):
                raise GraphError(f"tree edge ({u},{v}) is not an edge of the host")
            tadj[u] |= 1 << v
            tadj[v] |= 1 << u
        # BFS from 0 must reach everything; acyclicity follows from the edge count.
        parent = [-1] * n
        depth = [0] * n
        seen = 1
        order = [0]
        for x in order:
            wmask = tadj[x] & ~seen
            seen |= wmask
            for w in mask_vertices(wmask):
                parent[w] = x
                depth[w] = depth[x] + 1
                order.append(w)
        if len(order) != n:
            raise GraphError("tree edges do not span the graph")
        self.host = host
        self.edges = es
        self.parent = tuple(parent)
        self.depth = tuple(depth)
        self.tree_adj_mask = tuple(tadj)
        lm = 0
        for v in range(n):
            if tadj[v] and tadj[v] == (tadj[v] & -tadj[v]):
                lm |= 1 << v
        self.leaf_mask = lm

    @property
    def leaves(self) -> tuple[int, ...]:
        return tuple(mask_vertices(self.leaf_mask))

    def tree_degree(self, v: int) -> int:
        return bin(self.tree_adj_mask[v]).count("1")

    def has_tree_edge(self, u: int, v: int) -> bool:
        return (self.tree_adj_mask[u] >> v) & 1 == 1

    def path_vertices(self, u: int, v: int) -> tuple[int, ...]:
        """Vertex sequence of the unique u-v path in the tree."""
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
        right.pop()  # meeting vertex already in `left`
        return tuple(left + right[::-1])

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

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SpanningTree)
            and self.host == other.host
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.host, self.edges))

    def __repr__(self) -> str:
        return f"SpanningTree(n={self.host.n}, edges={self.edges})"


def tree_path(t: SpanningTree, u: int, v: int) -> TreePath:
    """The unique u-v path in the tree; u == v yields a single-vertex path."""
    n = t.host.n
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError("path endpoints must be vertices of the host")
    return TreePath(t.path_vertices(u, v))
