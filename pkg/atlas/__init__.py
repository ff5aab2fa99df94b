"""Named families, canonical forms and isomorph-free searches."""

from atlas.augment import SearchClass, enumerate_levels, enumerate_pure_hypergraphs
from atlas.canonical import CanonicalLabeling, canonical_form, canonical_labeling, canonical_relabel, is_isomorphic
from atlas.families import Family, FamilySpec, family_variable_names, generate
from atlas.searches import conjecture_scan, reproduce_degree3_uniqueness, reproduce_section4, triple_union_survey

__all__ = [
    "CanonicalLabeling",
    "Family",
    "FamilySpec",
    "SearchClass",
    "canonical_form",
    "canonical_labeling",
    "canonical_relabel",
    "conjecture_scan",
    "enumerate_levels",
    "enumerate_pure_hypergraphs",
    "family_variable_names",
    "generate",
    "is_isomorphic",
    "reproduce_degree3_uniqueness",
    "reproduce_section4",
    "triple_union_survey",
]
