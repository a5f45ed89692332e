"""Regenerate data/herschel.json by constrained enumeration.

The target is pinned by invariants alone: the planar 3-connected bipartite
graph on parts of size 5 and 6 whose degree sequence is (4,4,4,3,3) on the
5-side and all 3s on the 6-side.  The enumeration below shows this graph is
unique up to isomorphism (|Aut| = 12, diameter 4), so no drawn picture needs
to be trusted.

Run from the repo root:  PYTHONPATH=src python3 tools/derive_herschel.py
"""

import itertools
import json
import pathlib

import networkx as nx

from tuttetrees.graph import Graph
from tuttetrees.planar import is_planar
from tuttetrees.structure import connectivity_at_least

OUT = pathlib.Path(__file__).resolve().parent.parent / "src/tuttetrees/data/herschel.json"


def main() -> None:
    triples = list(itertools.combinations(range(5), 3))
    target = sorted([4, 4, 4, 3, 3])
    found = []
    for combo in itertools.combinations_with_replacement(triples, 6):
        deg = [0] * 5
        for t in combo:
            for x in t:
                deg[x] += 1
        if sorted(deg) != target:
            continue
        edges = [(a, 5 + i) for i, t in enumerate(combo) for a in t]
        g = Graph(11, edges)
        if not is_planar(g) or not connectivity_at_least(g, 3):
            continue
        found.append(g)

    uniq: list[nx.Graph] = []
    for g in found:
        ng = nx.Graph(g.edges)
        ng.add_nodes_from(range(11))
        if not any(nx.is_isomorphic(ng, h) for h in uniq):
            uniq.append(ng)
    assert len(uniq) == 1, f"expected a unique graph, got {len(uniq)}"
    h = uniq[0]
    aut = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())
    assert aut == 12 and nx.diameter(h) == 4, (aut, nx.diameter(h))

    edges = sorted(tuple(sorted(e)) for e in h.edges())
    OUT.write_text(
        json.dumps(
            {
                "note": (
                    "Derived by constrained enumeration: the unique planar "
                    "3-connected bipartite graph on parts of size 5 and 6 with "
                    "degree sequence (4,4,4,3,3 | 3,3,3,3,3,3). |Aut| = 12, "
                    "diameter 4."
                ),
                "n": 11,
                "edges": [list(e) for e in edges],
            },
            indent=1,
        )
        + "\n"
    )
    print(f"wrote {OUT} ({len(edges)} edges)")


if __name__ == "__main__":
    main()
