"""Canonical forms of hypergraphs under vertex relabeling.

Edges are split into cells by color refinement on the vertex-edge incidence
graph. For every edge order that respects the cells, each vertex gets an
incidence word (bit t-1-k set when it lies in the k-th edge); the certificate
of the order is the descending list of words. The canonical form is the
largest certificate over all such orders, prefixed by n and t. Vertices with
equal words are twins, so the words determine the hypergraph up to isomorphism.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import chain, permutations, product

from hypercomb.hypergraph import Hypergraph, edge_key, make_hypergraph


@dataclass(frozen=True)
class CanonicalLabeling:
    """Canonical form plus the edge order and vertex order that realize it."""

    form: bytes
    edge_order: tuple[int, ...]
    vertex_order: tuple[int, ...]

    @property
    def last_edge(self) -> int:
        """0-based index of the edge in the last canonical position."""
        return self.edge_order[-1]

    def hex(self) -> str:
        return self.form.hex()


def _ranks(signatures: list) -> list[int]:
    order = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
    return [order[sig] for sig in signatures]


def edge_cells(G: Hypergraph) -> list[list[int]]:
    """Edge indices grouped by stable refinement color, cells in color order."""
    incident = [[k for k, e in enumerate(G.edges) if v in e] for v in range(1, G.n + 1)]
    vcol = _ranks([len(ks) for ks in incident])
    ecol = _ranks([len(e) for e in G.edges])
    while True:
        new_ecol = _ranks([(ecol[k], tuple(sorted(vcol[v - 1] for v in e))) for k, e in enumerate(G.edges)])
        new_vcol = _ranks([(vcol[i], tuple(sorted(new_ecol[k] for k in ks))) for i, ks in enumerate(incident)])
        stable = len(set(new_ecol)) == len(set(ecol)) and len(set(new_vcol)) == len(set(vcol))
        ecol, vcol = new_ecol, new_vcol
        if stable:
            break
    cells: dict[int, list[int]] = {}
    for k, c in enumerate(ecol):
        cells.setdefault(c, []).append(k)
    return [cells[c] for c in sorted(cells)]


def _orders(cells: list[list[int]]) -> Iterator[tuple[int, ...]]:
    for choice in product(*(permutations(cell) for cell in cells)):
        yield tuple(chain.from_iterable(choice))


def _words(G: Hypergraph, order: tuple[int, ...]) -> list[int]:
    t = len(order)
    words = [0] * G.n
    for pos, k in enumerate(order):
        bit = 1 << (t - 1 - pos)
        for v in G.edges[k]:
            words[v - 1] |= bit
    return words


def canonical_labeling(G: Hypergraph) -> CanonicalLabeling:
    best: list[int] | None = None
    best_order: tuple[int, ...] = ()
    for order in _orders(edge_cells(G)):
        cert = sorted(_words(G, order), reverse=True)
        if best is None or cert > best:
            best, best_order = cert, order
    words = _words(G, best_order)
    vertex_order = tuple(sorted(range(1, G.n + 1), key=lambda v: -words[v - 1]))
    width = max(1, (G.t + 7) // 8)
    form = bytes([G.n, G.t]) + b"".join(w.to_bytes(width, "big") for w in best or [])
    return CanonicalLabeling(form=form, edge_order=best_order, vertex_order=vertex_order)


def canonical_form(G: Hypergraph) -> bytes:
    """Equal exactly for isomorphic hypergraphs (same n, edges unordered)."""
    return canonical_labeling(G).form


def canonical_relabel(G: Hypergraph) -> Hypergraph:
    """The canonical representative of G's isomorphism class."""
    labeling = canonical_labeling(G)
    index = {v: i for i, v in enumerate(labeling.vertex_order, start=1)}
    edges = sorted((frozenset(index[v] for v in e) for e in G.edges), key=edge_key)
    return make_hypergraph(G.n, edges)


def is_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    return canonical_form(G) == canonical_form(H)
