"""Stanley-Reisner complexes described by their minimal nonfaces."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from errors import TooManyFaces
from hypercomb.bits import low_bits, mask_of, vertices_of
from hypercomb.hypergraph import Hypergraph, edge_key


def face_masks(vertex_mask: int, nonfaces: Iterable[int], cap: int | None = None) -> list[int]:
    """All faces (as masks, the empty face first) of the complex on `vertex_mask`.

    A face is a subset of `vertex_mask` containing no nonface. Faces are grown
    by adding vertices in increasing bit order, so a new nonface can only be
    one whose top bit is the vertex just added.
    """
    by_top: dict[int, list[int]] = {}
    for nf in nonfaces:
        if nf & ~vertex_mask:
            continue
        top = 1 << (nf.bit_length() - 1)
        by_top.setdefault(top, []).append(nf)
    verts = list(low_bits(vertex_mask))

    faces = [0]
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        for k in range(start, len(verts)):
            bit = verts[k]
            grown = face | bit
            if any(grown & nf == nf for nf in by_top.get(bit, ())):
                continue
            faces.append(grown)
            if cap is not None and len(faces) > cap:
                raise TooManyFaces(f"more than {cap} faces")
            stack.append((grown, k + 1))
    return faces


@dataclass(frozen=True)
class SimplicialComplexView:
    """Gamma on `vertices`, given by the minimal nonfaces inside `vertices`."""

    vertices: frozenset[int]
    minimal_nonfaces: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, G: Hypergraph) -> "SimplicialComplexView":
        """Gamma(G): the edges of G are the minimal nonfaces."""
        return cls(frozenset(range(1, G.n + 1)), G.edges)

    @classmethod
    def from_masks(cls, vertex_mask: int, nonfaces: Iterable[int]) -> "SimplicialComplexView":
        inside = [frozenset(vertices_of(nf)) for nf in nonfaces if not nf & ~vertex_mask]
        return cls(frozenset(vertices_of(vertex_mask)), tuple(sorted(inside, key=edge_key)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_mask(self) -> int:
        return mask_of(self.vertices)

    @cached_property
    def nonface_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(nf) for nf in self.minimal_nonfaces)

    def restrict(self, W: Iterable[int]) -> "SimplicialComplexView":
        """Gamma[W], the induced subcomplex."""
        wset = frozenset(W) & self.vertices
        return SimplicialComplexView(
            wset, tuple(nf for nf in self.minimal_nonfaces if nf <= wset)
        )

    def is_face(self, F: Iterable[int]) -> bool:
        fset = frozenset(F)
        return fset <= self.vertices and not any(nf <= fset for nf in self.minimal_nonfaces)

    def faces(self, cap: int | None = None) -> Iterator[frozenset[int]]:
        """Faces ordered by (size, lex), the empty face first."""
        masks = face_masks(self.vertex_mask, self.nonface_masks, cap)
        for m in sorted(masks, key=lambda m: (m.bit_count(), tuple(vertices_of(m)))):
            yield frozenset(vertices_of(m))
