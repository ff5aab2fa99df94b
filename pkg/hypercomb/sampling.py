"""Seeded random hypergraphs for property tests and sampled searches."""

import random
from itertools import combinations

from errors import BadParams
from hypercomb.hypergraph import Hypergraph, make_hypergraph


def random_hypertree(d: int, n: int, rng: random.Random) -> Hypergraph:
    """Degree-d hypertree on n vertices.

    Each new edge is an existing edge with one vertex swapped for a new vertex,
    so the result is always properly d-colorable.
    """
    if d < 1 or n < d:
        raise BadParams(f"need 1 <= d <= n, got d={d}, n={n}")
    edges = [frozenset(range(1, d + 1))]
    for v in range(d + 1, n + 1):
        base = rng.choice(edges)
        dropped = rng.choice(sorted(base))
        edges.append(base - {dropped} | {v})
    return make_hypergraph(n, edges)


def random_hyperforest(d: int, t: int, rng: random.Random) -> Hypergraph:
    """Degree-d hyperforest with t edges of sizes 2..d (the first has size d).

    The old part of a new edge is a proper subset of one existing edge, which
    keeps the edge set an antichain and the hypergraph d-colorable.
    """
    if d < 2 or t < 1:
        raise BadParams(f"need d >= 2 and t >= 1, got d={d}, t={t}")
    edges = [frozenset(range(1, d + 1))]
    n = d
    for _ in range(t - 1):
        size = rng.randint(2, d)
        base = sorted(rng.choice(edges))
        k = rng.randint(0, min(size - 1, len(base) - 1))
        old = set(rng.sample(base, k))
        fresh = set(range(n + 1, n + 1 + size - k))
        n += size - k
        edges.append(frozenset(old | fresh))
    return make_hypergraph(n, edges)


def random_pure_hypergraph(d: int, t: int, n: int, rng: random.Random) -> Hypergraph:
    """t distinct random d-subsets of 1..n."""
    pool = list(combinations(range(1, n + 1), d))
    if t > len(pool):
        raise BadParams(f"only {len(pool)} distinct {d}-subsets of {n} vertices")
    return make_hypergraph(n, rng.sample(pool, t))


def random_hypergraph(n: int, edge_count: int, rng: random.Random, max_size: int | None = None) -> Hypergraph:
    """Random antichain on n vertices: random subsets, minimalized."""
    top = min(max_size or n, n)
    raw = []
    for _ in range(edge_count):
        size = rng.randint(1, top)
        raw.append(rng.sample(range(1, n + 1), size))
    return make_hypergraph(n, raw, minimalize=True)
