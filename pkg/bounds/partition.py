"""Nearly even partitions."""

from dataclasses import dataclass
from math import comb

from errors import BadParams, ZeroParts


@dataclass(frozen=True)
class NearlyEvenPartition:
    """Weakly decreasing parts differing pairwise by at most one.

    `padded` marks a total smaller than the part count, where some parts are 0.
    """

    parts: tuple[int, ...]
    padded: bool = False

    @property
    def total(self) -> int:
        return sum(self.parts)

    def binomial_sum(self, j: int) -> int:
        """sum_i C(parts_i, j)."""
        return sum(comb(p, j) for p in self.parts)


def nearly_even_partition(r: int, d: int) -> NearlyEvenPartition:
    if d <= 0:
        raise ZeroParts(f"cannot split {r} into {d} parts")
    if r < 0:
        raise BadParams(f"cannot partition the negative total {r}")
    q, rem = divmod(r, d)
    return NearlyEvenPartition(parts=(q + 1,) * rem + (q,) * (d - rem), padded=r < d)
