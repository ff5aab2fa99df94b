"""Lower and upper bounds on Betti numbers, their witnesses and verification."""

from bounds.closed_forms import BoundTheorem, bound_value
from bounds.partition import NearlyEvenPartition, nearly_even_partition
from bounds.pcount import degree_spread, p_count
from bounds.turan import turan_number
from bounds.verify import verify_bound
from bounds.witness import WitnessSubset, witness_subset

__all__ = [
    "BoundTheorem",
    "NearlyEvenPartition",
    "WitnessSubset",
    "bound_value",
    "degree_spread",
    "nearly_even_partition",
    "p_count",
    "turan_number",
    "verify_bound",
    "witness_subset",
]
