"""Reduced homology of induced Stanley-Reisner subcomplexes over exact fields."""

from homology.field import QQ, FieldSpec
from homology.reduced import (
    HomologyProfile,
    homology_of_masks,
    is_cone,
    reduced_betti_all,
    reduced_euler,
)

__all__ = [
    "QQ",
    "FieldSpec",
    "HomologyProfile",
    "homology_of_masks",
    "is_cone",
    "reduced_betti_all",
    "reduced_euler",
]
