"""Minimal (Hochster) and Taylor graded Betti numbers."""

from betti.consistency import euler_consistency
from betti.hochster import betti_table, hochster_graded_betti, lcm_lattice
from betti.table import BettiKind, BettiTable, total_betti
from betti.taylor import taylor_beta2_3dm1, taylor_graded_betti, taylor_table

__all__ = [
    "BettiKind",
    "BettiTable",
    "betti_table",
    "euler_consistency",
    "hochster_graded_betti",
    "lcm_lattice",
    "taylor_beta2_3dm1",
    "taylor_graded_betti",
    "taylor_table",
    "total_betti",
]
