"""Hypergraph and simplicial-complex combinatorics."""

from hypercomb.coloring import Coloring, proper_coloring
from hypercomb.complex import SimplicialComplexView, face_masks
from hypercomb.graphs import IntersectionGraph, diameter, intersection_graph
from hypercomb.hypergraph import (
    Hypergraph,
    antistar,
    induced,
    leaves,
    link,
    make_hypergraph,
)
from hypercomb.orderings import TreeOrdering, forest_ordering, tree_ordering

__all__ = [
    "Coloring",
    "Hypergraph",
    "IntersectionGraph",
    "SimplicialComplexView",
    "TreeOrdering",
    "antistar",
    "diameter",
    "face_masks",
    "forest_ordering",
    "induced",
    "intersection_graph",
    "leaves",
    "link",
    "make_hypergraph",
    "proper_coloring",
    "tree_ordering",
]
