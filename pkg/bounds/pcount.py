"""Induced single-edge triples of the intersection graph."""

from hypercomb.graphs import IntersectionGraph


def p_count(Gp: IntersectionGraph) -> int:
    """Number of 3-sets of vertices spanning exactly one edge of Gp."""
    everyone = (1 << Gp.t) - 1
    nbrs = Gp.neighbor_masks
    total = 0
    for i, j in Gp.adjacency:
        seen = nbrs[i - 1] | nbrs[j - 1] | 1 << (i - 1) | 1 << (j - 1)
        total += (everyone & ~seen).bit_count()
    return total


def degree_spread(Gp: IntersectionGraph) -> int:
    """sum_v deg(v) (t - 1 - deg(v)): pairs of one neighbor and one non-neighbor, per vertex."""
    return sum(deg * (Gp.t - 1 - deg) for deg in Gp.degrees())
