"""Deterministic constructors for the named graphs and families used throughout.

The Herschel and ring-of-gadgets adjacency lists ship as JSON data assets (see
data/ and the tools/ scripts that regenerate them); their claimed properties
are re-derived by the test suite rather than trusted.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Optional

from .graph import Graph, GraphError, SpanningTree
from .planar import Embedding, embedding_from_rotation, is_planar, planar_embed
from .structure import connectivity_at_least


@lru_cache(maxsize=None)
def _asset(name: str) -> dict:
    with resources.files("tuttetrees.data").joinpath(name).open() as fh:
        return json.load(fh)


def herschel() -> Graph:
    """The smallest nonhamiltonian planar 3-connected graph (11 vertices,
    bipartite); adjacency from the versioned data asset."""
    data = _asset("herschel.json")
    return Graph(data["n"], [tuple(e) for e in data["edges"]])


def _stacked_triangulation(n: int) -> Graph:
    """Apollonian triangulation: start from K4 and repeatedly place a new
    vertex inside the first face of the current face list."""
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    edges = list(combinations(range(4), 2))
    for v in range(4, n):
        a, b, c = faces.pop(0)
        edges += [(a, v), (b, v), (c, v)]
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    return Graph(n, edges)


def _triangulation_faces(h: Graph) -> tuple[tuple[int, ...], ...]:
    emb = planar_embed(h)
    if emb is None:
        raise GraphError("seed triangulation is not planar")
    if not connectivity_at_least(h, 3):
        raise GraphError("seed triangulation is not 3-connected")
    if any(len(f) != 3 for f in emb.faces):
        raise GraphError("seed graph is not a triangulation")
    return emb.faces


def g_n(n: int, triangulation: Optional[Graph] = None) -> Graph:
    """Black triangulation H_n plus one white vertex per face joined to that
    face's three black vertices; 2n-4 whites, whites pairwise nonadjacent.

    By default H_n is the stacked triangulation (deterministic); any planar
    3-connected triangulation on n vertices may be supplied instead.
    """
    if n < 5:
        raise GraphError("g_n requires n >= 5")
    if triangulation is not None:
        if triangulation.n != n:
            raise GraphError("seed triangulation must have exactly n vertices")
        h = triangulation
    else:
        h = _stacked_triangulation(n)
    faces = _triangulation_faces(h)
    edges = list(h.edges)
    for i, face in enumerate(faces):
        w = n + i
        edges += [(v, w) for v in face]
    return Graph(n + len(faces), edges)


def star_s() -> Graph:
    """Five white vertices plus one black vertex per 3-subset of them, each
    black joined to its triple (15 vertices, 30 edges, 3-connected bipartite)."""
    edges = []
    for i, triple in enumerate(combinations(range(5), 3)):
        b = 5 + i
        edges += [(v, b) for v in triple]
    return Graph(15, edges)


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, edges)


def _complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# Faces of K5 embedded in the projective plane (delete one vertex from the
# antipodal-quotient K6 triangulation): five triangles plus the pentagon that
# was the deleted vertex's link.
_K5_PROJECTIVE_FACES = (
    (0, 1, 3),
    (0, 1, 4),
    (0, 2, 4),
    (1, 2, 3),
    (2, 3, 4),
    (0, 2, 1, 4, 3),
)


def _k5_barycentric() -> Graph:
    """Barycentric subdivision of K5 embedded in the projective plane: one new
    vertex per edge and per face of the map (5 + 10 + 6 = 21 vertices,
    60 edges, 3-connected, nonplanar).

    Plain edge subdivision of K5 (no face vertices) is a different graph
    that is only 2-connected and has no Tutte tree at all.
    """
    k5_edges = list(combinations(range(5), 2))
    mid = {e: 5 + i for i, e in enumerate(k5_edges)}
    edges = []
    for (u, v), m in mid.items():
        edges += [(u, m), (v, m)]
    for fi, face in enumerate(_K5_PROJECTIVE_FACES):
        c = 15 + fi
        k = len(face)
        for j in range(k):
            u, v = face[j], face[(j + 1) % k]
            edges.append(tuple(sorted((c, u))))
            edges.append(tuple(sorted((c, mid[tuple(sorted((u, v)))]))))
    return Graph(21, sorted(set(edges)))


def zamfirescu() -> Graph:
    """A nontraceable cubic planar 3-connected graph (ring of three gadgets
    built from Tutte-graph fragments); adjacency from the data asset."""
    data = _asset("zamfirescu.json")
    return Graph(data["n"], [tuple(e) for e in data["edges"]])


def zamfirescu_terminals() -> tuple[int, int]:
    """The designated nonadjacent common-face vertex pair (v1, v2)."""
    data = _asset("zamfirescu.json")
    return data["v1"], data["v2"]


def noftt() -> Graph:
    """The ring graph plus a new vertex w joined to v1 and v2, plus the edge
    v1v2: planar, with a spanning tree whose leaves all lie on one face, and
    with exactly three {v1,v2}-bridges of which only the ring bridge lacks a
    Hamiltonian v1v2-path."""
    z = zamfirescu()
    v1, v2 = zamfirescu_terminals()
    w = z.n
    return Graph(z.n + 1, list(z.edges) + [(v1, v2), (v1, w), (v2, w)])


def noftt_witness() -> tuple[SpanningTree, Embedding]:
    """The stored leaves-on-one-face witness: a spanning tree of noftt() and a
    validated embedding with every tree leaf on a single face."""
    g = noftt()
    data = _asset("noftt_witness.json")
    tree = SpanningTree(g, [tuple(e) for e in data["tree_edges"]])
    emb = embedding_from_rotation(g, [tuple(r) for r in data["rotation"]])
    return tree, emb


_NAMED = {
    "petersen": _petersen,
    "k33": lambda: _complete_bipartite(3, 3),
    "k35": lambda: _complete_bipartite(3, 5),
    "k5_barycentric": _k5_barycentric,
    "herschel": herschel,
    "star_s": star_s,
    "zamfirescu": zamfirescu,
    "noftt": noftt,
}


def named(name: str) -> Graph:
    """Look up a named graph; raises on unknown names."""
    try:
        builder = _NAMED[name]
    except KeyError:
        raise GraphError(
            f"unknown graph name {name!r}; known: {', '.join(sorted(_NAMED))}"
        ) from None
    return builder()


def named_graphs() -> tuple[str, ...]:
    return tuple(sorted(_NAMED))
