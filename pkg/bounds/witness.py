"""Witness subsets for the hypertree lower bound.

Given a hypertree G with its proper coloring, a color class B (the blue
vertices) and a nonempty B' inside B, build U' with U' & B = B' and
H~_{|U'| - |B'| - 1}(Gamma(G[U'])) != 0:

  start from U = V - (B - B') and the edges of G inside U;
  Step 1: while some non-blue u has every blue vertex in an edge avoiding u,
          delete u together with the edges through it;
  Step 2: take a non-blue u such that some blue v has all its edges through u,
          record u, pass to the link of u and drop vertices left in no edge;
  repeat until no non-blue vertex is left; U' is the recorded vertices plus B'.
"""

from collections.abc import Iterable
from dataclasses import dataclass

from errors import BadParams, ImproperColoring, NotAHypertree, NotApplicable, WitnessCheckFailed
from hypercomb.bits import mask_of
from hypercomb.coloring import Coloring
from hypercomb.hypergraph import Hypergraph, minimal_edges
from hypercomb.orderings import tree_ordering
from homology.field import QQ, FieldSpec
from betti.hochster import support_homology


@dataclass(frozen=True)
class WitnessSubset:
    u_prime: frozenset[int]
    b_prime: frozenset[int]
    deleted: tuple[int, ...]
    blue: int
    reduced_betti: int

    @property
    def homology_degree(self) -> int:
        return len(self.u_prime) - len(self.b_prime) - 1


def _step_one(U: set[int], edges: list[frozenset[int]], blue: frozenset[int]) -> list[frozenset[int]]:
    while True:
        for u in sorted(U - blue):
            avoiding = [e for e in edges if u not in e]
            if all(any(v in e for e in avoiding) for v in blue):
                U.discard(u)
                edges = avoiding
                break
        else:
            return edges


def _step_two_vertex(U: set[int], edges: list[frozenset[int]], blue: frozenset[int]) -> int | None:
    for u in sorted(U - blue):
        for v in sorted(blue):
            through = [e for e in edges if v in e]
            if through and all(u in e for e in through):
                return u
    return None


def witness_subset(
    G: Hypergraph,
    coloring: Coloring,
    blue: int,
    b_prime: Iterable[int],
    field: FieldSpec = QQ,
) -> WitnessSubset:
    """Run the witness construction and check its homology before returning."""
    if tree_ordering(G) is None:
        raise NotAHypertree(f"{G} admits no hypertree ordering")
    if coloring.d != G.degree or not coloring.is_proper(G):
        raise ImproperColoring(f"not a proper {G.degree}-coloring of {G}")
    if G.n == G.degree:
        raise NotApplicable("a single edge is the base case; there is nothing to witness")
    B = coloring.color_class(blue)
    Bp = frozenset(b_prime)
    if not Bp or not Bp <= B:
        raise BadParams(f"B' = {sorted(Bp)} must be a nonempty subset of color class {blue} = {sorted(B)}")

    U = set(range(1, G.n + 1)) - (B - Bp)
    edges = [e for e in G.edges if e <= U]
    deleted: list[int] = []
    while True:
        edges = _step_one(U, edges, Bp)
        if not U - Bp:
            break
        u = _step_two_vertex(U, edges, Bp)
        if u is None:
            raise WitnessCheckFailed(f"no Step 2 vertex among {sorted(U - Bp)} with W = {deleted}")
        deleted.append(u)
        U.discard(u)
        edges = minimal_edges(e - {u} for e in edges)
        if frozenset() in edges:
            raise WitnessCheckFailed(f"{{{u}}} became an edge; the link is the unit ideal")
        covered = frozenset().union(*edges)
        stranded = U - covered
        if stranded & Bp:
            raise WitnessCheckFailed(f"blue vertices {sorted(stranded & Bp)} left in no edge")
        U -= stranded

    u_prime = frozenset(deleted) | Bp
    degree = len(u_prime) - len(Bp) - 1
    dims = support_homology(mask_of(u_prime), G.masks, field)
    if dims.get(degree, 0) < 1:
        raise WitnessCheckFailed(f"H~_{degree} vanishes on U' = {sorted(u_prime)}")
    return WitnessSubset(
        u_prime=u_prime,
        b_prime=Bp,
        deleted=tuple(deleted),
        blue=blue,
        reduced_betti=dims[degree],
    )
