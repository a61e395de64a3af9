import random
from fractions import Fraction

import pytest

from kcut import Edge, Graph, parse_graph

E1_TEXT = "p kcut 2 1\ne 1 2 5\n"

C5_TEXT = "p kcut 5 5\n" + "".join(f"e {i} {i % 5 + 1} 1\n" for i in range(1, 6))

# two unit triangles {1,2,3} and {4,5,6} joined by the unit bridge 3-4
TT_TEXT = """\
p kcut 6 7
e 1 2 1
e 1 3 1
e 2 3 1
e 4 5 1
e 4 6 1
e 5 6 1
e 3 4 1
"""

K4_TEXT = "p kcut 4 6\n" + "".join(
    f"e {u} {v} 1\n" for u in range(1, 5) for v in range(u + 1, 5)
)

P3_TEXT = "p kcut 3 2\ne 1 2 1\ne 2 3 1\n"

TT_BRIDGE = 6  # edge id of the bridge in TT_TEXT


@pytest.fixture(scope="session")
def e1():
    return parse_graph(E1_TEXT)


@pytest.fixture(scope="session")
def c5():
    return parse_graph(C5_TEXT)


@pytest.fixture(scope="session")
def tt():
    return parse_graph(TT_TEXT)


@pytest.fixture(scope="session")
def k4():
    return parse_graph(K4_TEXT)


@pytest.fixture(scope="session")
def p3():
    return parse_graph(P3_TEXT)


def _random_connected(rng: random.Random, n: int, extra: int) -> Graph:
    edges = []
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.append((min(u, v), max(u, v)))
    for _ in range(extra):
        u = rng.randrange(n)
        v = rng.randrange(n)
        while v == u:
            v = rng.randrange(n)
        edges.append((min(u, v), max(u, v)))  # parallels allowed
    return Graph(
        n, tuple(Edge(u, v, Fraction(rng.randint(1, 9))) for u, v in edges)
    )


def build_random_suite(count: int = 50, seed: int = 7340320):
    """Deterministic random suite: connected graphs, n <= 7, integer
    capacities <= 9, occasional parallel edges."""
    rng = random.Random(seed)
    graphs = []
    sizes = [2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7]
    for i in range(count):
        n = sizes[i % len(sizes)]
        max_extra = min(4, n * (n - 1) // 2 - (n - 1) + 1)
        extra = rng.randint(0, max_extra)
        graphs.append((f"g{i:02d}-n{n}", _random_connected(rng, n, extra)))
    return graphs


_SUITE = None


def full_suite():
    global _SUITE
    if _SUITE is None:
        fixtures = [
            ("E1", parse_graph(E1_TEXT)),
            ("C5", parse_graph(C5_TEXT)),
            ("TT", parse_graph(TT_TEXT)),
            ("K4", parse_graph(K4_TEXT)),
            ("P3", parse_graph(P3_TEXT)),
        ]
        _SUITE = fixtures + build_random_suite()
    return _SUITE


@pytest.fixture(scope="session")
def suite():
    return full_suite()


@pytest.fixture(scope="session")
def small_suite():
    """A fast subset for per-module property tests."""
    return [(name, g) for name, g in full_suite() if g.n <= 5][:18]


def edge_ids_of_partition(g: Graph, partition):
    block = partition.block_of(g.n)
    return [i for i, e in enumerate(g.edges) if block[e.u] != block[e.v]]
