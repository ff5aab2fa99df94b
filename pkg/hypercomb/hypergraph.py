"""Hypergraphs as generator supports of squarefree monomial ideals."""

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from errors import DegenerateLink, EmptyEdge, NotAntichain, VertexOutOfRange
from hypercomb.bits import mask_of


def edge_key(edge: frozenset[int]) -> tuple[int, tuple[int, ...]]:
    """Canonical edge order: by size, then lexicographically."""
    return len(edge), tuple(sorted(edge))


@dataclass(frozen=True)
class Hypergraph:
    """Vertices 1..n and an antichain of nonempty edges.

    `origin` maps vertex i to the caller's label `origin[i - 1]` when the
    hypergraph was cut out of a larger one; empty means the identity.
    """

    n: int
    edges: tuple[frozenset[int], ...]
    origin: tuple[int, ...] = field(default=(), compare=False)

    @property
    def t(self) -> int:
        return len(self.edges)

    @property
    def degree(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    @property
    def is_pure(self) -> bool:
        return len({len(e) for e in self.edges}) <= 1

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @cached_property
    def support(self) -> frozenset[int]:
        """Vertices covered by at least one edge."""
        return frozenset().union(*self.edges)

    def label(self, v: int) -> int:
        return self.origin[v - 1] if self.origin else v

    def labeled_edges(self) -> tuple[frozenset[int], ...]:
        """Edges in the caller's labels."""
        if not self.origin:
            return self.edges
        return tuple(frozenset(self.label(v) for v in e) for e in self.edges)

    def edges_containing(self, v: int) -> list[frozenset[int]]:
        return [e for e in self.edges if v in e]

    def __str__(self) -> str:
        if not self.edges:
            return f"Hypergraph(n={self.n}, no edges)"
        gens = ", ".join("*".join(f"x{v}" for v in sorted(e)) for e in self.edges)
        return f"Hypergraph(n={self.n}: {gens})"


def minimal_edges(edges: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-minimal distinct edges, in canonical order."""
    ordered = sorted(set(edges), key=edge_key)
    kept: list[frozenset[int]] = []
    for e in ordered:
        if not any(k <= e for k in kept):
            kept.append(e)
    return kept


def _check_vertices(n: int, vertices: Iterable[int]) -> None:
    for v in vertices:
        if not 1 <= v <= n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{n}")


def make_hypergraph(
    n: int,
    raw_edges: Iterable[Iterable[int]],
    minimalize: bool = False,
) -> Hypergraph:
    """Validate and canonicalize an edge list into a Hypergraph."""
    if n < 0:
        raise VertexOutOfRange(f"vertex count {n} is negative")
    edges: list[frozenset[int]] = []
    for raw in raw_edges:
        e = frozenset(raw)
        if not e:
            raise EmptyEdge("edges must be nonempty")
        _check_vertices(n, e)
        edges.append(e)

    if minimalize:
        edges = minimal_edges(edges)
    else:
        dupes = [e for e, c in Counter(edges).items() if c > 1]
        if dupes:
            raise NotAntichain(f"edge {sorted(dupes[0])} appears more than once")
        for a in edges:
            for b in edges:
                if a < b:
                    raise NotAntichain(f"edge {sorted(a)} is contained in {sorted(b)}")
        edges.sort(key=edge_key)
    return Hypergraph(n=n, edges=tuple(edges))


def _reindexed(G: Hypergraph, keep: list[int], edges: Iterable[frozenset[int]]) -> Hypergraph:
    index = {v: i + 1 for i, v in enumerate(keep)}
    new_edges = sorted((frozenset(index[v] for v in e) for e in edges), key=edge_key)
    return Hypergraph(
        n=len(keep),
        edges=tuple(new_edges),
        origin=tuple(G.label(v) for v in keep),
    )


def induced(G: Hypergraph, W: Iterable[int]) -> Hypergraph:
    """G[W]: vertex set W, edges of G contained in W."""
    keep = sorted(set(W))
    _check_vertices(G.n, keep)
    wset = frozenset(keep)
    return _reindexed(G, keep, (e for e in G.edges if e <= wset))


def link(G: Hypergraph, v: int) -> Hypergraph:
    """lk_G(v): drop v from every edge, then keep only minimal edges."""
    _check_vertices(G.n, [v])
    if frozenset([v]) in G.edges:
        raise DegenerateLink(f"{{{G.label(v)}}} is an edge; its link is the unit ideal")
    keep = [u for u in range(1, G.n + 1) if u != v]
    return _reindexed(G, keep, minimal_edges(e - {v} for e in G.edges))


def antistar(G: Hypergraph, v: int) -> Hypergraph:
    """G - v: remove v and every edge through it."""
    _check_vertices(G.n, [v])
    keep = [u for u in range(1, G.n + 1) if u != v]
    return _reindexed(G, keep, (e for e in G.edges if v not in e))


def leaves(G: Hypergraph) -> frozenset[int]:
    """Vertices contained in exactly one edge."""
    counts = Counter(v for e in G.edges for v in e)
    return frozenset(v for v, c in counts.items() if c == 1)
