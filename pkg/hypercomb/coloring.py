"""Proper vertex colorings of hypergraphs."""

from dataclasses import dataclass

from errors import ColorCountTooSmall
from hypercomb.hypergraph import Hypergraph
from hypercomb.orderings import TreeOrdering, tree_ordering


@dataclass(frozen=True)
class Coloring:
    """colors[v - 1] is the color (1..d) of vertex v."""

    colors: tuple[int, ...]
    d: int

    def color(self, v: int) -> int:
        return self.colors[v - 1]

    def color_class(self, c: int) -> frozenset[int]:
        return frozenset(v for v, col in enumerate(self.colors, start=1) if col == c)

    def class_sizes(self, vertices: frozenset[int] | None = None) -> tuple[int, ...]:
        """Sizes n_1..n_d, counted over `vertices` (all vertices by default)."""
        sizes = [0] * self.d
        for v, c in enumerate(self.colors, start=1):
            if vertices is None or v in vertices:
                sizes[c - 1] += 1
        return tuple(sizes)

    def is_proper(self, G: Hypergraph) -> bool:
        if len(self.colors) != G.n or any(not 1 <= c <= self.d for c in self.colors):
            return False
        return all(len({self.color(v) for v in e}) == len(e) for e in G.edges)

    def same_up_to_permutation(self, other: "Coloring") -> bool:
        """True when other = sigma o self for some permutation sigma of the colors."""
        if len(self.colors) != len(other.colors):
            return False
        sigma: dict[int, int] = {}
        for a, b in zip(self.colors, other.colors):
            if sigma.setdefault(a, b) != b:
                return False
        return len(set(sigma.values())) == len(sigma)


def _propagate(G: Hypergraph, ordering: TreeOrdering, d: int) -> Coloring | None:
    colors = [0] * G.n
    first, *rest = ordering.order
    for c, v in enumerate(sorted(G.edges[first - 1]), start=1):
        colors[v - 1] = c
    for idx in rest:
        edge = G.edges[idx - 1]
        (fresh,) = [v for v in edge if colors[v - 1] == 0]
        used = {colors[v - 1] for v in edge if v != fresh}
        free = [c for c in range(1, d + 1) if c not in used]
        if not free:
            return None
        colors[fresh - 1] = free[0]
    return Coloring(tuple(c or 1 for c in colors), d)


def _backtrack(G: Hypergraph, d: int) -> Coloring | None:
    order: list[int] = []
    for e in G.edges:
        order.extend(sorted(v for v in e if v not in order))
    order.extend(v for v in range(1, G.n + 1) if v not in order)
    incident = {v: [e for e in G.edges if v in e] for v in order}
    colors = [0] * G.n

    def fits(v: int, c: int) -> bool:
        return not any(u != v and colors[u - 1] == c for e in incident[v] for u in e)

    def place(k: int, highest: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        # a new color is only ever opened in increasing order
        for c in range(1, min(d, highest + 1) + 1):
            if fits(v, c):
                colors[v - 1] = c
                if place(k + 1, max(highest, c)):
                    return True
                colors[v - 1] = 0
        return False

    if not place(0, 0):
        return None
    return Coloring(tuple(colors), d)


def proper_coloring(G: Hypergraph, d: int, max_edges: int | None = None) -> Coloring | None:
    """A proper d-coloring, or None.

    Hypertrees are colored by propagation along their ordering, which is forced
    when d equals the degree. Propagation can still fail: the ordering
    definition admits pure hypergraphs such as {1,2,3},{1,2,4},{3,4,5} with no
    proper 3-coloring. Everything else is colored by backtracking.
    """
    if d < G.degree:
        raise ColorCountTooSmall(f"{d} colors cannot properly color an edge of size {G.degree}")
    ordering = tree_ordering(G, max_edges)
    if ordering is not None and ordering.order:
        coloring = _propagate(G, ordering, d)
        if coloring is not None and coloring.is_proper(G):
            return coloring
        if d == G.degree:
            return None
    return _backtrack(G, d)


def all_proper_colorings(G: Hypergraph, d: int) -> list[Coloring]:
    """Every proper d-coloring, by exhaustive search. Small G only."""
    incident = {v: [e for e in G.edges if v in e] for v in range(1, G.n + 1)}
    colors = [0] * G.n
    found: list[Coloring] = []

    def walk(v: int) -> None:
        if v > G.n:
            found.append(Coloring(tuple(colors), d))
            return
        for c in range(1, d + 1):
            # only earlier vertices are colored; later ones are still 0
            if any(u < v and colors[u - 1] == c for e in incident[v] for u in e):
                continue
            colors[v - 1] = c
            walk(v + 1)
        colors[v - 1] = 0

    walk(1)
    return found
