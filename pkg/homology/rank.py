"""Exact ranks of sparse integer matrices."""

from sympy.polys.domains import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from homology.field import FieldSpec


def exact_rank(rows: dict[int, dict[int, int]], shape: tuple[int, int], field: FieldSpec) -> int:
    """Rank over `field` of the sparse integer matrix `rows` (row -> col -> entry).

    Over the rationals the rank is read off a fraction-free echelon form of the
    integer matrix, so no rationals are ever formed. Over GF(p) the matrix is
    reduced mod p first.
    """
    if not rows or 0 in shape:
        return 0
    entries = {i: {j: ZZ(v) for j, v in row.items() if v} for i, row in rows.items()}
    matrix = DomainMatrix({i: r for i, r in entries.items() if r}, shape, ZZ)
    if field.is_rational:
        _, _, pivots = matrix.rref_den()
        return len(pivots)
    return matrix.convert_to(GF(field.characteristic)).rank()
