"""Graded Betti numbers of the Taylor resolution.

beta^T_{i,j} counts the (i+1)-sets of generators whose lcm has degree j; for
squarefree generators that degree is the size of the union of supports.
"""

from collections import Counter
from itertools import combinations

import config
from errors import NotPure, TooManyEdges
from hypercomb.hypergraph import Hypergraph
from betti.table import BettiKind, BettiTable


def _check_edges(G: Hypergraph, max_edges: int | None) -> None:
    cap = config.MAX_EDGES if max_edges is None else max_edges
    if G.t > cap:
        raise TooManyEdges(f"{G.t} edges exceeds the Taylor cap {cap}")


def taylor_graded_betti(G: Hypergraph, i: int, j: int, max_edges: int | None = None) -> int:
    """|{W : |W| = i + 1, |union of F_k over k in W| = j}|, enumerating (i+1)-sets only."""
    _check_edges(G, max_edges)
    if i < 0 or i + 1 > G.t:
        return 0
    count = 0
    for combo in combinations(G.masks, i + 1):
        union = 0
        for m in combo:
            union |= m
        if union.bit_count() == j:
            count += 1
    return count


def taylor_table(G: Hypergraph, max_edges: int | None = None) -> BettiTable:
    """Every beta^T_{i,j}, by one depth-first pass over the nonempty sets of edges."""
    _check_edges(G, max_edges)
    masks = G.masks
    counts: Counter[tuple[int, int]] = Counter()
    # (next edge, union so far, edges chosen so far)
    stack = [(0, 0, 0)]
    while stack:
        start, union, chosen = stack.pop()
        for k in range(start, len(masks)):
            grown = union | masks[k]
            counts[(chosen, grown.bit_count())] += 1
            stack.append((k + 1, grown, chosen + 1))
    return BettiTable.from_counts(BettiKind.TAYLOR, G.n, counts)


def taylor_beta2_3dm1(G: Hypergraph) -> int:
    """beta^T_{2,3d-1} for pure G of degree d, by counting edge triples.

    Half the number of ordered triples (F_i, F_j, F_k) of distinct edges with
    F_i disjoint from F_j and F_k, and |F_j & F_k| = 1.
    """
    if not G.is_pure:
        raise NotPure(f"edge sizes {sorted({len(e) for e in G.edges})} are mixed")
    masks = G.masks
    t = len(masks)
    count = 0
    for i in range(t):
        for j in range(t):
            if j == i or masks[i] & masks[j]:
                continue
            for k in range(t):
                if k in (i, j) or masks[i] & masks[k]:
                    continue
                if (masks[j] & masks[k]).bit_count() == 1:
                    count += 1
    return count // 2
