import numpy as np
import pytest

from signed_spectra.fixtures import K7_COUNTEREXAMPLE, K8_COUNTEREXAMPLE
from signed_spectra.graphs import SignedGraph, SimpleGraph


def random_signed_graph(rng: np.random.Generator, n_max: int = 12) -> SignedGraph:
    """Seeded random connected-or-not simple graph with random signs."""
    n = int(rng.integers(1, n_max + 1))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                edges.append((i, j))
    base = SimpleGraph(n, tuple(edges))
    signs = int(rng.integers(0, 1 << base.m)) if base.m else 0
    return SignedGraph(base, signs)


def random_connected_signed_graph(rng: np.random.Generator, n_max: int = 10) -> SignedGraph:
    """As above but guaranteed connected (random spanning tree always kept)."""
    n = int(rng.integers(2, n_max + 1))
    edges = set()
    perm = rng.permutation(n)
    for idx in range(1, n):
        u = int(perm[idx])
        v = int(perm[rng.integers(0, idx)])
        edges.add((min(u, v), max(u, v)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                edges.add((i, j))
    base = SimpleGraph(n, tuple(sorted(edges)))
    signs = int(rng.integers(0, 1 << base.m))
    return SignedGraph(base, signs)


@pytest.fixture
def ex1():
    return K7_COUNTEREXAMPLE


@pytest.fixture
def ex2():
    return K8_COUNTEREXAMPLE
