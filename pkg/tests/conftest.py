"""Shared hypergraphs and helpers for the test suite."""

import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from hypercomb.hypergraph import Hypergraph, make_hypergraph


def path_graph(n: int) -> Hypergraph:
    return make_hypergraph(n, [{i, i + 1} for i in range(1, n)])


def star_graph(leaves: int) -> Hypergraph:
    """Center 1, leaves 2..leaves+1."""
    return make_hypergraph(leaves + 1, [{1, v} for v in range(2, leaves + 2)])


@pytest.fixture
def path6() -> Hypergraph:
    return path_graph(6)


@pytest.fixture
def star3() -> Hypergraph:
    return star_graph(3)


@pytest.fixture
def triangle() -> Hypergraph:
    return make_hypergraph(3, [{1, 2}, {1, 3}, {2, 3}])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@st.composite
def small_ideals(draw, max_n: int = 8, max_edges: int = 6) -> Hypergraph:
    """Random antichains on at most max_n vertices."""
    n = draw(st.integers(1, max_n))
    subsets = [frozenset(c) for size in range(1, min(n, 4) + 1) for c in combinations(range(1, n + 1), size)]
    raw = draw(st.lists(st.sampled_from(subsets), min_size=1, max_size=max_edges))
    return make_hypergraph(n, raw, minimalize=True)


@st.composite
def vertex_masks(draw, max_n: int = 7) -> tuple[int, list[int]]:
    """A vertex mask and a list of nonface masks inside it."""
    n = draw(st.integers(1, max_n))
    full = (1 << n) - 1
    nonfaces = draw(st.lists(st.integers(1, full), max_size=6))
    return full, nonfaces
