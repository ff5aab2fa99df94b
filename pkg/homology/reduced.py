"""Reduced simplicial homology of Stanley-Reisner complexes."""

from collections.abc import Iterable
from dataclasses import dataclass

import config
from hypercomb.bits import low_bits, minimal_masks
from hypercomb.complex import SimplicialComplexView, face_masks
from homology.field import QQ, FieldSpec
from homology.rank import exact_rank


@dataclass(frozen=True)
class HomologyProfile:
    """Nonzero reduced Betti numbers, as sorted (p, dim) pairs."""

    dims: tuple[tuple[int, int], ...] = ()

    def __getitem__(self, p: int) -> int:
        return dict(self.dims).get(p, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    def euler(self) -> int:
        """sum_p (-1)^p dim H~_p."""
        return sum((-1) ** (p % 2) * dim for p, dim in self.dims)


def cone_apex(vertex_mask: int, nonfaces: Iterable[int]) -> int:
    """Lowest vertex bit lying in no nonface inside `vertex_mask`, or 0."""
    covered = 0
    for nf in nonfaces:
        if not nf & ~vertex_mask:
            covered |= nf
    free = vertex_mask & ~covered
    return free & -free


def simplify(vertex_mask: int, nonfaces: Iterable[int]) -> tuple[int, list[int]] | None:
    """Shrink the complex without changing its reduced homology; None if acyclic.

    Singleton nonfaces are not vertices of the complex and are dropped. A
    vertex whose link is a cone is deleted: its star and its link are both
    acyclic, so Mayer-Vietoris identifies the homology with that of the antistar.
    """
    vmask = vertex_mask
    live = [nf for nf in nonfaces if not nf & ~vmask]
    while True:
        singles = 0
        for nf in live:
            if nf.bit_count() == 1:
                singles |= nf
        if singles:
            vmask &= ~singles
            live = [nf for nf in live if not nf & singles]
        if not vmask:
            return 0, []
        if cone_apex(vmask, live):
            return None
        for bit in low_bits(vmask):
            rest = vmask & ~bit
            link_nonfaces = minimal_masks(nf & ~bit for nf in live)
            if cone_apex(rest, link_nonfaces):
                vmask = rest
                live = [nf for nf in live if not nf & bit]
                break
        else:
            return vmask, live


def _boundary_rows(upper: list[int], lower_index: dict[int, int]) -> dict[int, dict[int, int]]:
    rows: dict[int, dict[int, int]] = {}
    for r, face in enumerate(upper):
        row: dict[int, int] = {}
        for k, bit in enumerate(low_bits(face)):
            row[lower_index[face & ~bit]] = -1 if k % 2 else 1
        rows[r] = row
    return rows


def homology_of_masks(
    vertex_mask: int,
    nonfaces: Iterable[int],
    field: FieldSpec = QQ,
    cap: int | None = None,
    reduce: bool = True,
) -> dict[int, int]:
    """Nonzero dims of H~_p for the complex on `vertex_mask` with the given nonfaces."""
    live = [nf for nf in nonfaces if not nf & ~vertex_mask]
    vmask = vertex_mask
    if reduce:
        shrunk = simplify(vmask, live)
        if shrunk is None:
            return {}
        vmask, live = shrunk

    faces = face_masks(vmask, live, config.MAX_FACES if cap is None else cap)
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    top = max(by_size)

    ranks = {0: 0, top + 1: 0}
    for size in range(1, top + 1):
        lower = by_size[size - 1]
        index = {f: i for i, f in enumerate(lower)}
        rows = _boundary_rows(by_size[size], index)
        ranks[size] = exact_rank(rows, (len(by_size[size]), len(lower)), field)

    dims = {}
    for size in range(0, top + 1):
        dim = len(by_size[size]) - ranks[size] - ranks[size + 1]
        if dim:
            dims[size - 1] = dim
    return dims


def reduced_betti_all(
    K: SimplicialComplexView,
    field: FieldSpec = QQ,
    cap: int | None = None,
    reduce: bool = True,
) -> HomologyProfile:
    """dim H~_p(K; field) for every p >= -1, using the augmented chain complex."""
    dims = homology_of_masks(K.vertex_mask, K.nonface_masks, field, cap, reduce)
    return HomologyProfile(tuple(sorted(dims.items())))


def is_cone(K: SimplicialComplexView) -> int | None:
    """A vertex lying in no minimal nonface (every facet then contains it), else None."""
    apex = cone_apex(K.vertex_mask, K.nonface_masks)
    return apex.bit_length() if apex else None


def reduced_euler(K: SimplicialComplexView, cap: int | None = None) -> int:
    """sum over faces F, the empty face included, of (-1)^(|F| - 1)."""
    faces = face_masks(K.vertex_mask, K.nonface_masks, config.MAX_FACES if cap is None else cap)
    return sum(1 if f.bit_count() % 2 else -1 for f in faces)
