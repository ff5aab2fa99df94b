"""Ordinary-graph views: diameter of degree-2 hypergraphs and the intersection graph."""

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from errors import Disconnected, NotAGraph
from hypercomb.hypergraph import Hypergraph


def to_networkx(G: Hypergraph) -> nx.Graph:
    """Vertices 1..n; only valid for pure degree-2 hypergraphs."""
    if not G.edges or not G.is_pure or G.degree != 2:
        raise NotAGraph(f"expected a pure degree-2 hypergraph, got degree {G.degree}")
    graph = nx.Graph()
    graph.add_nodes_from(range(1, G.n + 1))
    graph.add_edges_from(tuple(sorted(e)) for e in G.edges)
    return graph


def diameter(G: Hypergraph) -> int:
    """max over vertex pairs of the shortest-path length."""
    graph = to_networkx(G)
    if not nx.is_connected(graph):
        raise Disconnected("diameter is only defined for connected graphs")
    return nx.diameter(graph)


@dataclass(frozen=True)
class IntersectionGraph:
    """G': one vertex per edge of G, adjacent when the edges meet."""

    t: int
    adjacency: frozenset[tuple[int, int]]

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Bit j - 1 of entry i - 1 is set when i and j are adjacent."""
        masks = [0] * self.t
        for i, j in self.adjacency:
            masks[i - 1] |= 1 << (j - 1)
            masks[j - 1] |= 1 << (i - 1)
        return tuple(masks)

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.adjacency

    def degree(self, i: int) -> int:
        return self.neighbor_masks[i - 1].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.neighbor_masks)

    @property
    def edge_count(self) -> int:
        return len(self.adjacency)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.t + 1))
        graph.add_edges_from(self.adjacency)
        return graph


def intersection_graph(G: Hypergraph) -> IntersectionGraph:
    masks = G.masks
    pairs = frozenset(
        (i + 1, j + 1)
        for i in range(len(masks))
        for j in range(i + 1, len(masks))
        if masks[i] & masks[j]
    )
    return IntersectionGraph(t=len(masks), adjacency=pairs)
