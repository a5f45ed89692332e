import itertools
import random
from importlib import resources

import pytest

from tuttetrees.graph import Graph


def corpus_path(name: str):
    return resources.files("tuttetrees").joinpath("data", "corpora", name)


def corpus_lines(name: str) -> list[str]:
    text = corpus_path(name).read_text()
    return [ln for ln in text.splitlines() if ln.strip()]


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


def theta_graph() -> Graph:
    # two degree-3 hubs joined by three internally disjoint 2-edge paths
    return Graph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])


def random_connected(rng: random.Random, n: int) -> Graph:
    """Random connected graph: random spanning tree plus random extra edges."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        edges.add(tuple(sorted((verts[i], verts[rng.randrange(i)]))))
    extra = [e for e in itertools.combinations(range(n), 2) if e not in edges]
    for e in extra:
        if rng.random() < 0.3:
            edges.add(e)
    return Graph(n, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(20260823)
