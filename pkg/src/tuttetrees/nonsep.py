"""Nonseparating paths and cycles, fundamental cycles, and the two tree verdicts.

Verification is certificate-producing: a failing verdict names the separating
path or fundamental cycle so an independent checker can replay it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .graph import (
    Graph,
    GraphError,
    SpanningTree,
    TreePath,
    connected_mask,
    mask_of,
)

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Cycle:
    """A cycle given by its vertex sequence (wraparound implied)."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise GraphError("a cycle has at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("a cycle has no repeated vertices")

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)


@dataclass(frozen=True)
class SeparatingPath:
    vertices: tuple[int, ...]

    def to_jsonable(self):
        return {"type": "separating-path", "vertices": list(self.vertices)}


@dataclass(frozen=True)
class SeparatingCycle:
    edge: tuple[int, int]
    vertices: tuple[int, ...]

    def to_jsonable(self):
        return {
            "type": "separating-cycle",
            "edge": list(self.edge),
            "vertices": list(self.vertices),
        }


@dataclass(frozen=True)
class WitnessTree:
    edges: tuple[tuple[int, int], ...]

    def to_jsonable(self):
        return {"type": "tree", "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class WitnessCycle:
    vertices: tuple[int, ...]

    def to_jsonable(self):
        return {"type": "cycle", "vertices": list(self.vertices)}


@dataclass(frozen=True)
class WitnessPath:
    vertices: tuple[int, ...]

    def to_jsonable(self):
        return {"type": "path", "vertices": list(self.vertices)}


Witness = Union[SeparatingPath, SeparatingCycle, WitnessTree, WitnessCycle, WitnessPath]


@dataclass(frozen=True)
class SearchStats:
    nodes: int = 0
    trees: int = 0
    prunes: int = 0
    exhausted: bool = False

    def to_jsonable(self):
        return {
            "nodes": self.nodes,
            "trees": self.trees,
            "prunes": self.prunes,
            "exhausted": self.exhausted,
        }


@dataclass(frozen=True)
class Certificate:
    verdict: str
    witness: Optional[Witness] = None
    stats: Optional[SearchStats] = None

    def to_jsonable(self):
        return {
            "schema": 1,
            "verdict": self.verdict,
            "witness": self.witness.to_jsonable() if self.witness is not None else None,
            "stats": self.stats.to_jsonable() if self.stats is not None else None,
        }


def _validate_path(g: Graph, vertices: Sequence[int]) -> tuple[int, ...]:
    vs = tuple(vertices)
    if not vs:
        raise GraphError("a path has at least one vertex")
    if len(set(vs)) != len(vs):
        raise GraphError("a path has no repeated vertices")
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"path vertex {v} out of range")
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"({a},{b}) is not an edge of the graph")
    return vs


def is_nonseparating_path(g: Graph, p: TreePath | Sequence[int]) -> bool:
    """True iff removing the path's vertices leaves a connected graph
    (the null graph counts as connected)."""
    vs = p.vertices if isinstance(p, TreePath) else p
    vs = _validate_path(g, vs)
    return connected_mask(g, g.full_mask & ~mask_of(vs))


def is_nonseparating_cycle(g: Graph, c: Cycle) -> bool:
    """True iff removing the cycle's vertices leaves a connected graph;
    Hamiltonian cycles are nonseparating by the null-graph convention."""
    vs = c.vertices
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"cycle vertex {v} out of range")
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not g.has_edge(a, b):
            raise GraphError(f"({a},{b}) is not an edge of the graph")
    return connected_mask(g, g.full_mask & ~c.mask)


def fundamental_cycle(t: SpanningTree, e: tuple[int, int]) -> Cycle:
    """The unique cycle in T+e for a non-tree edge e."""
    u, v = e
    if not t.host.has_edge(u, v):
        raise GraphError(f"({u},{v}) is not an edge of the host")
    if t.has_tree_edge(u, v):
        raise GraphError(f"({u},{v}) is a tree edge")
    return Cycle(t.path_vertices(u, v))


def non_tree_edges(t: SpanningTree) -> tuple[tuple[int, int], ...]:
    return tuple(e for e in t.host.edges if not t.has_tree_edge(*e))


def verify_tutte_tree(g: Graph, t: SpanningTree) -> Certificate:
    """Holds iff every tree path, single-vertex paths included, is nonseparating.

    The failing witness is the lexicographically first separating path by its
    (min endpoint, max endpoint) pair.
    """
    if g.n < 3:
        raise GraphError("tree verification needs at least 3 vertices")
    if t.host != g:
        raise GraphError("tree does not belong to this graph")
    full = g.full_mask
    for u in range(g.n):
        for v in range(u, g.n):
            pm = t.path_mask(u, v)
            if not connected_mask(g, full & ~pm):
                return Certificate(
                    FAILS, SeparatingPath(tuple(t.path_vertices(u, v)))
                )
    return Certificate(HOLDS, WitnessTree(t.edges))


def verify_fundamental_tutte_tree(g: Graph, t: SpanningTree) -> Certificate:
    """Holds iff every fundamental cycle of the tree is nonseparating.

    Trees of graphs with m = n-1 pass vacuously.  The failing witness is the
    first separating (non-tree edge, cycle) pair in edge order.
    """
    if t.host != g:
        raise GraphError("tree does not belong to this graph")
    full = g.full_mask
    for u, v in g.edges:
        if t.has_tree_edge(u, v):
            continue
        pm = t.path_mask(u, v)
        if not connected_mask(g, full & ~pm):
            return Certificate(
                FAILS, SeparatingCycle((u, v), tuple(t.path_vertices(u, v)))
            )
    return Certificate(HOLDS, WitnessTree(t.edges))
