"""Planarity, combinatorial embeddings and face-based leaf predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .graph import Graph, GraphError, SpanningTree, is_connected


@dataclass(frozen=True)
class Embedding:
    """Rotation system of a plane graph plus its face list.

    `rotation[v]` lists the neighbors of v in cyclic order; each face is the
    vertex sequence of its boundary walk.  For a connected plane embedding
    Euler's formula n - m + f = 2 holds (checked at construction).
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def face_vertex_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(f) for f in self.faces)


def _trace_faces(g: Graph, rotation: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Walk every directed edge once, turning by the rotation at each vertex."""
    succ = []
    for v in range(g.n):
        rot = rotation[v]
        succ.append({rot[i]: rot[(i + 1) % len(rot)] for i in range(len(rot))})
    remaining = {(u, v) for u in range(g.n) for v in g.adj[u]}
    faces = []
    while remaining:
        start = min(remaining)
        walk = []
        u, v = start
        while True:
            walk.append(u)
            remaining.discard((u, v))
            u, v = v, succ[v][u]
            if (u, v) == start:
                break
        faces.append(tuple(walk))
    return tuple(faces)


def embedding_from_rotation(g: Graph, rotation) -> Embedding:
    """Build and validate an embedding from an explicit rotation system.

    Raises if the rotation does not match the graph's adjacency or if the face
    count violates Euler's formula (i.e., the rotation is not planar).
    """
    if not is_connected(g):
        raise GraphError("embeddings are defined for connected graphs")
    rot = tuple(tuple(r) for r in rotation)
    if len(rot) != g.n:
        raise GraphError("rotation must list every vertex")
    for v in range(g.n):
        if sorted(rot[v]) != list(g.adj[v]):
            raise GraphError(f"rotation at vertex {v} does not match its neighbors")
    faces = _trace_faces(g, rot)
    if g.n - g.m + len(faces) != 2:
        raise GraphError(
            f"rotation system is not planar: n-m+f = {g.n}-{g.m}+{len(faces)} != 2"
        )
    return Embedding(graph=g, rotation=rot, faces=faces)


def to_networkx(g: Graph) -> "nx.Graph":
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges)
    return ng


def planar_embed(g: Graph) -> Optional[Embedding]:
    """A combinatorial embedding when the graph is planar, None otherwise."""
    if not is_connected(g):
        raise GraphError("planar_embed requires a connected graph")
    if g.n == 0:
        raise GraphError("planar_embed requires at least one vertex")
    if g.n == 1:
        return Embedding(graph=g, rotation=((),), faces=((0,),))
    ok, emb = nx.check_planarity(to_networkx(g), counterexample=False)
    if not ok:
        return None
    data = emb.get_data()  # v -> neighbors in clockwise order
    rotation = tuple(tuple(data[v]) for v in range(g.n))
    return embedding_from_rotation(g, rotation)


def is_planar(g: Graph) -> bool:
    return nx.check_planarity(to_networkx(g), counterexample=False)[0]


def leaves_clique(g: Graph, t: SpanningTree) -> bool:
    """True iff every pair of leaves of the tree is adjacent in the graph."""
    leaves = t.leaves
    return all(
        g.has_edge(leaves[i], leaves[j])
        for i in range(len(leaves))
        for j in range(i + 1, len(leaves))
    )


def leaves_induce_triangle(g: Graph, t: SpanningTree) -> bool:
    """True iff the tree has exactly 3 leaves and they are pairwise adjacent."""
    return len(t.leaves) == 3 and leaves_clique(g, t)


def leaves_on_common_face(e: Embedding, t: SpanningTree) -> bool:
    """True iff some face boundary walk contains every leaf of the tree."""
    if t.host != e.graph:
        raise GraphError("tree and embedding belong to different graphs")
    leaf_set = set(t.leaves)
    return any(leaf_set <= set(face) for face in e.faces)


def embedding_to_dot(e: Embedding) -> str:
    """DOT export of an embedded graph with face annotations."""
    lines = ["graph embedded {"]
    for v in range(e.graph.n):
        rot = ",".join(str(w) for w in e.rotation[v])
        lines.append(f'  {v} [rotation="{rot}"];')
    for u, v in e.graph.edges:
        lines.append(f"  {u} -- {v};")
    for i, face in enumerate(e.faces):
        walk = ",".join(str(v) for v in face)
        lines.append(f'  // face {i}: {walk}')
    lines.append("}")
    return "\n".join(lines) + "\n"
