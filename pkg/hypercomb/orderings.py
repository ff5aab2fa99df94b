"""Hyperforest and hypertree edge orderings, decided exactly."""

from dataclasses import dataclass

import config
from errors import TooManyEdges
from hypercomb.hypergraph import Hypergraph


@dataclass(frozen=True)
class TreeOrdering:
    """Edge order (1-based indices into G.edges) and the new vertices each edge brings."""

    order: tuple[int, ...]
    new_counts: tuple[int, ...]


def _search(G: Hypergraph, exactly_one: bool, max_edges: int | None) -> TreeOrdering | None:
    cap = config.MAX_EDGES if max_edges is None else max_edges
    t = G.t
    if t > cap:
        raise TooManyEdges(f"{t} edges exceeds the ordering cap {cap}")
    if t == 0:
        return TreeOrdering((), ())

    masks = G.masks
    full = (1 << t) - 1
    # larger edges first, so a forest ordering opens with a full-size edge when one can
    by_size = sorted(range(t), key=lambda e: -masks[e].bit_count())
    # the union of a placed set depends only on the set, so failures memoize by set
    dead: set[int] = set()

    def extend(chosen: int, union: int, order: list[int]) -> list[int] | None:
        if chosen == full:
            return order
        if chosen in dead:
            return None
        for e in by_size:
            if chosen >> e & 1:
                continue
            fresh = (masks[e] & ~union).bit_count()
            if chosen and (fresh != 1 if exactly_one else fresh < 1):
                continue
            found = extend(chosen | 1 << e, union | masks[e], order + [e])
            if found is not None:
                return found
        dead.add(chosen)
        return None

    order = extend(0, 0, [])
    if order is None:
        return None
    counts = []
    union = 0
    for e in order:
        counts.append((masks[e] & ~union).bit_count())
        union |= masks[e]
    return TreeOrdering(tuple(e + 1 for e in order), tuple(counts))


def forest_ordering(G: Hypergraph, max_edges: int | None = None) -> TreeOrdering | None:
    """An order in which every edge after the first adds at least one vertex."""
    return _search(G, exactly_one=False, max_edges=max_edges)


def tree_ordering(G: Hypergraph, max_edges: int | None = None) -> TreeOrdering | None:
    """An order in which every edge after the first adds exactly one vertex (pure G only)."""
    if not G.is_pure:
        return None
    return _search(G, exactly_one=True, max_edges=max_edges)
