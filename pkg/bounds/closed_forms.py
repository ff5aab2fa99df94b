"""Closed-form values of the lower and upper bounds."""

from collections.abc import Sequence
from enum import Enum
from math import comb

from errors import BadParams
from bounds.partition import nearly_even_partition


class BoundTheorem(str, Enum):
    TREE_LB = "tree_lb"
    FOREST_LB = "forest_lb"
    BETA35 = "beta35"
    B36 = "b36"
    DIAMETER_EQ = "diameter_eq"

    @classmethod
    def parse(cls, name: "str | BoundTheorem") -> "BoundTheorem":
        try:
            return cls(name)
        except ValueError:
            choices = ", ".join(t.value for t in cls)
            raise BadParams(f"unknown theorem {name!r}; choose one of {choices}") from None


def _require(value: int | None, name: str, theorem: BoundTheorem, least: int) -> int:
    if value is None or value < least:
        raise BadParams(f"{theorem.value} needs {name} >= {least}, got {value}")
    return value


def _complement_sum(t: int, parts: int) -> int:
    return comb(t, 3) - nearly_even_partition(t, parts).binomial_sum(3)


def bound_value(
    theorem: str | BoundTheorem,
    *,
    sizes: Sequence[int] | None = None,
    t: int | None = None,
    d: int | None = None,
    j: int | None = None,
) -> int:
    """The bound a theorem predicts.

    tree_lb and diameter_eq: sum_i C(sizes_i, j).
    forest_lb: the same over the nearly even d-partition of t + d - 1.
    beta35 / b36: C(t,3) minus sum C(t_i,3) over the nearly even 2- / 3-partition of t.
    """
    which = BoundTheorem.parse(theorem)
    if which in (BoundTheorem.TREE_LB, BoundTheorem.DIAMETER_EQ):
        if not sizes or any(n < 0 for n in sizes):
            raise BadParams(f"{which.value} needs nonnegative color class sizes, got {sizes}")
        if which is BoundTheorem.DIAMETER_EQ and len(sizes) != 2:
            raise BadParams("diameter_eq needs exactly two color class sizes")
        jj = _require(j, "j", which, 2)
        return sum(comb(n, jj) for n in sizes)
    if which is BoundTheorem.FOREST_LB:
        tt = _require(t, "t", which, 1)
        dd = _require(d, "d", which, 1)
        jj = _require(j, "j", which, 2)
        return nearly_even_partition(tt + dd - 1, dd).binomial_sum(jj)
    tt = _require(t, "t", which, 0)
    return _complement_sum(tt, 2 if which is BoundTheorem.BETA35 else 3)
