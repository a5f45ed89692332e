"""Generate the exhaustive graph6 corpora shipped under data/corpora/.

Vertex-augmentation enumeration: every connected graph on n vertices arises
from some (possibly disconnected) graph on n-1 vertices by adding one vertex
joined to a nonempty vertex subset.  For planar targets the base graph must
itself be planar, which keeps the candidate pool small.  Isomorphism
rejection: Weisfeiler-Lehman hash buckets refined by exact isomorphism.

Expected class counts (used as hard checks):
  connected:        1 1 2 6 21 112 853 11117          (n = 1..8)
  connected planar: 1 1 2 6 20  99 646  5974 71885    (n = 1..9)

Run from the repo root:  PYTHONPATH=src python3 tools/make_corpora.py
"""

import itertools
import pathlib
import sys
from collections import defaultdict

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parent.parent / "src/tuttetrees/data/corpora"

CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
CONNECTED_PLANAR = {1: 1, 2: 1, 3: 2, 4: 6, 5: 20, 6: 99, 7: 646, 8: 5974, 9: 71885}


def g6(g: nx.Graph) -> str:
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def wl(g: nx.Graph) -> str:
    if g.number_of_nodes() == 0:
        return "empty"
    return nx.weisfeiler_lehman_graph_hash(g, iterations=3)


class IsoSet:
    """Graph collection with isomorphism rejection."""

    def __init__(self):
        self.buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
        self.count = 0

    def add(self, g: nx.Graph) -> bool:
        key = (g.number_of_nodes(), g.number_of_edges(), wl(g))
        bucket = self.buckets[key]
        for h in bucket:
            if nx.is_isomorphic(g, h):
                return False
        bucket.append(g)
        self.count += 1
        return True

    def graphs(self):
        for bucket in self.buckets.values():
            yield from bucket


def augment(bases, n, keep):
    """All graphs obtained by joining a new vertex to a nonempty subset of an
    (n-1)-vertex base, filtered by `keep`, deduplicated."""
    out = IsoSet()
    total = len(bases)
    for i, base in enumerate(bases):
        verts = list(base.nodes())
        for k in range(1, n):
            for subset in itertools.combinations(verts, k):
                g = base.copy()
                g.add_node(n - 1)
                g.add_edges_from((n - 1, x) for x in subset)
                if keep(g):
                    out.add(g)
        if (i + 1) % 200 == 0 or i + 1 == total:
            print(f"  base {i+1}/{total}, classes so far: {out.count}", flush=True)
    return out


def is_connected(g):
    return nx.is_connected(g)


def is_connected_planar(g):
    return nx.is_connected(g) and nx.check_planarity(g, counterexample=False)[0]


def all_graphs_upto7():
    """All graphs on at most 7 vertices (connected or not), from the atlas."""
    by_n = defaultdict(list)
    for A in nx.graph_atlas_g()[1:]:
        by_n[A.number_of_nodes()].append(A)
    return by_n


def disjoint_unions(components_by_n, n):
    """All disconnected graphs on n vertices assembled from connected pieces,
    one per multiset of pieces (pieces chosen in nonincreasing (size, index)
    order to avoid duplicates)."""
    out = []

    def build(chosen):
        g = nx.Graph()
        off = 0
        for comp in chosen:
            g.add_nodes_from(x + off for x in comp.nodes())
            g.add_edges_from((a + off, b + off) for a, b in comp.edges())
            off += comp.number_of_nodes()
        return g

    def rec(remaining, max_size, max_idx, chosen):
        if remaining == 0:
            if len(chosen) > 1:
                out.append(build(chosen))
            return
        for size in range(min(remaining, max_size), 0, -1):
            comps = components_by_n.get(size, [])
            hi = max_idx if size == max_size else len(comps) - 1
            for i in range(hi, -1, -1):
                rec(remaining - size, size, i, chosen + [comps[i]])

    top = components_by_n.get(n - 1, [])
    rec(n, n - 1, len(top) - 1, [])
    return out


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    by_n = all_graphs_upto7()

    conn_by_n = {
        n: [g for g in graphs if g.number_of_nodes() and nx.is_connected(g)]
        for n, graphs in by_n.items()
    }
    for n in range(1, 8):
        assert len(conn_by_n[n]) == CONNECTED[n], (n, len(conn_by_n[n]))

    lines = [g6(g) for n in range(1, 8) for g in conn_by_n[n]]
    (OUT / "connected_le7.g6").write_text("\n".join(lines) + "\n")
    print(f"connected_le7.g6: {len(lines)} graphs", flush=True)

    print("augmenting to connected n=8 ...", flush=True)
    conn8 = augment(by_n[7], 8, is_connected)
    assert conn8.count == CONNECTED[8], conn8.count
    conn8_graphs = sorted(conn8.graphs(), key=g6)
    (OUT / "connected_8.g6").write_text("\n".join(g6(g) for g in conn8_graphs) + "\n")
    print(f"connected_8.g6: {conn8.count} graphs", flush=True)

    planar_conn = {
        n: [g for g in conn_by_n[n] if nx.check_planarity(g, counterexample=False)[0]]
        for n in range(1, 8)
    }
    planar_conn[8] = [
        g for g in conn8_graphs if nx.check_planarity(g, counterexample=False)[0]
    ]
    for n in range(1, 9):
        assert len(planar_conn[n]) == CONNECTED_PLANAR[n], (n, len(planar_conn[n]))
    lines = [g6(g) for n in range(1, 9) for g in planar_conn[n]]
    (OUT / "planar_conn_le8.g6").write_text("\n".join(lines) + "\n")
    print(f"planar_conn_le8.g6: {len(lines)} graphs", flush=True)

    # all planar graphs on 8 vertices: connected ones plus disjoint unions of
    # smaller connected planar pieces
    planar8_all = list(planar_conn[8])
    planar8_all += disjoint_unions(planar_conn, 8)
    print(f"planar base graphs on 8 vertices: {len(planar8_all)}", flush=True)

    print("augmenting to connected planar n=9 ...", flush=True)
    planar9 = augment(planar8_all, 9, is_connected_planar)
    assert planar9.count == CONNECTED_PLANAR[9], planar9.count
    lines = sorted(g6(g) for g in planar9.graphs())
    (OUT / "planar_conn_9.g6").write_text("\n".join(lines) + "\n")
    print(f"planar_conn_9.g6: {planar9.count} graphs", flush=True)


if __name__ == "__main__":
    main()
