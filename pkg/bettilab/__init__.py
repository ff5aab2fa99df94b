"""bettilab - graded Betti numbers of squarefree monomial ideals, their bounds and searches."""

from atlas import FamilySpec, canonical_form, enumerate_pure_hypergraphs, generate
from atlas.searches import conjecture_scan, reproduce_degree3_uniqueness, reproduce_section4, triple_union_survey
from betti import BettiTable, betti_table, hochster_graded_betti, taylor_graded_betti, taylor_table, total_betti
from bounds import bound_value, nearly_even_partition, turan_number, verify_bound, witness_subset
from homology import QQ, FieldSpec, reduced_betti_all
from hypercomb import Hypergraph, make_hypergraph, proper_coloring
from archive import ReportStore
from schemas import IdealDocument, Report

__all__ = [
    "QQ",
    "BettiTable",
    "FamilySpec",
    "FieldSpec",
    "Hypergraph",
    "IdealDocument",
    "Report",
    "ReportStore",
    "betti_table",
    "bound_value",
    "canonical_form",
    "conjecture_scan",
    "enumerate_pure_hypergraphs",
    "generate",
    "hochster_graded_betti",
    "make_hypergraph",
    "nearly_even_partition",
    "proper_coloring",
    "reduced_betti_all",
    "reproduce_degree3_uniqueness",
    "reproduce_section4",
    "taylor_graded_betti",
    "taylor_table",
    "total_betti",
    "triple_union_survey",
    "turan_number",
    "verify_bound",
    "witness_subset",
]
