import random
from pathlib import Path

import pytest

from densify import Graph, load_edge_list

DATA = Path(__file__).parent / "data"

G1_EDGES = "a b\na c\na d\nb c\nb d\nc d\nb e\nd e\ne f\n"
G2_EDGES = "a b\na c\nb c\nb d\nc d\nc e\nd e\nc h\ng h\nf h\nf g\n"


def erdos_renyi(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, w) for u in range(n) for w in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def oracle_corpus(count: int = 216, seed: int = 20140824) -> list[Graph]:
    """Random G(n, p) graphs with n in 1..12 and p in {0.2, 0.5, 0.8}."""
    rng = random.Random(seed)
    ps = (0.2, 0.5, 0.8)
    return [erdos_renyi(1 + i % 12, ps[(i // 12) % 3], rng) for i in range(count)]


@pytest.fixture
def g1() -> Graph:
    return load_edge_list(G1_EDGES)


@pytest.fixture
def g2() -> Graph:
    return load_edge_list(G2_EDGES)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)
