"""Named families of ideals: extremal examples for every bound."""

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from errors import BadParams
from hypercomb.hypergraph import Hypergraph, make_hypergraph


class Family(str, Enum):
    EXTREMAL_HYPERTREE = "extremal_hypertree"
    PATH = "path"
    BETA35_EXTREMAL = "beta35_extremal"
    TAYLOR_EQUALITY = "taylor_equality"
    DEGREE3_UNIQUE = "degree3_unique"
    B36_EXTREMAL = "b36_extremal"


# parameter names, in order; extremal_hypertree takes d then n_1..n_d
_PARAMS: dict[Family, tuple[str, ...]] = {
    Family.EXTREMAL_HYPERTREE: ("d", "n_1..n_d"),
    Family.PATH: ("n",),
    Family.BETA35_EXTREMAL: ("t_1", "t_2"),
    Family.TAYLOR_EQUALITY: ("d", "r", "t"),
    Family.DEGREE3_UNIQUE: (),
    Family.B36_EXTREMAL: ("t_1", "t_2", "t_3"),
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _validate(self.family, self.params)

    @classmethod
    def parse(cls, name: str, params: Sequence[int | str] = ()) -> "FamilySpec":
        try:
            family = Family(name)
        except ValueError:
            choices = ", ".join(f.value for f in Family)
            raise BadParams(f"unknown family {name!r}; choose one of {choices}") from None
        try:
            values = tuple(int(p) for p in params)
        except ValueError:
            raise BadParams(f"{name} parameters must be integers, got {list(params)}") from None
        return cls(family, values)

    def __str__(self) -> str:
        return " ".join([self.family.value, *map(str, self.params)])


def _validate(family: Family, params: tuple[int, ...]) -> None:
    usage = f"{family.value}({', '.join(_PARAMS[family])})"
    if family is Family.EXTREMAL_HYPERTREE:
        if not params or params[0] < 2 or len(params) != params[0] + 1:
            raise BadParams(f"{usage}: need d >= 2 followed by d class sizes, got {params}")
        if any(n < 1 for n in params[1:]):
            raise BadParams(f"{usage}: class sizes must be >= 1, got {params[1:]}")
        return
    if len(params) != len(_PARAMS[family]):
        raise BadParams(f"{usage} takes {len(_PARAMS[family])} parameters, got {params}")
    if family is Family.PATH and params[0] < 2:
        raise BadParams(f"{usage}: need n >= 2")
    if family is Family.BETA35_EXTREMAL and (params[0] < 1 or params[1] < 0):
        raise BadParams(f"{usage}: need t_1 >= 1 and t_2 >= 0")
    if family is Family.TAYLOR_EQUALITY:
        d, r, t = params
        if not 1 <= r < d or t < 1:
            raise BadParams(f"{usage}: need 1 <= r < d and t >= 1, got {params}")
    if family is Family.B36_EXTREMAL and (any(p < 0 for p in params) or not any(params)):
        raise BadParams(f"{usage}: need nonnegative block sizes, not all zero")


def _extremal_hypertree(d: int, sizes: Sequence[int]) -> tuple[list[str], list[set[int]]]:
    names = [f"v{i}" for i in range(1, d + 1)]
    core = set(range(1, d + 1))
    edges = [set(core)]
    for i, n_i in enumerate(sizes, start=1):
        for j in range(1, n_i):
            names.append(f"u{i}_{j}")
            edges.append(core - {i} | {len(names)})
    return names, edges


def _beta35_extremal(t1: int, t2: int) -> tuple[list[str], list[set[int]]]:
    names = ["u1", *(f"v{k}" for k in range(1, t1 + 1))]
    edges = [{1, k} for k in range(2, t1 + 2)]
    if t2:
        names.append("u2")
        hub = len(names)
        for k in range(1, t2 + 1):
            names.append(f"w{k}")
            edges.append({hub, len(names)})
    return names, edges


def _taylor_equality(d: int, r: int, t: int) -> tuple[list[str], list[set[int]]]:
    common = d - r
    names = [f"x{i}" for i in range(1, common + 1)]
    edges = []
    for a in range(1, t + 1):
        start = len(names)
        names.extend(f"x{a}_{k}" for k in range(1, r + 1))
        edges.append(set(range(1, common + 1)) | set(range(start + 1, start + r + 1)))
    return names, edges


def _b36_extremal(t1: int, t2: int, t3: int) -> tuple[list[str], list[set[int]]]:
    names = ["x1", "x2", "x3"]
    edges = []
    for letter, pair, count in (("y", {1, 2}, t1), ("z", {1, 3}, t2), ("w", {2, 3}, t3)):
        for k in range(1, count + 1):
            names.append(f"{letter}{k}")
            edges.append(pair | {len(names)})
    return names, edges


def _build(spec: FamilySpec) -> tuple[list[str], list[set[int]]]:
    p = spec.params
    if spec.family is Family.EXTREMAL_HYPERTREE:
        return _extremal_hypertree(p[0], p[1:])
    if spec.family is Family.PATH:
        return [f"x{i}" for i in range(1, p[0] + 1)], [{i, i + 1} for i in range(1, p[0])]
    if spec.family is Family.BETA35_EXTREMAL:
        return _beta35_extremal(*p)
    if spec.family is Family.TAYLOR_EQUALITY:
        return _taylor_equality(*p)
    if spec.family is Family.DEGREE3_UNIQUE:
        raw = [(1, 2, 4), (1, 2, 5), (1, 3, 6), (1, 3, 7), (2, 3, 8), (2, 3, 9)]
        return [f"x{i}" for i in range(1, 10)], [set(e) for e in raw]
    return _b36_extremal(*p)


def generate(spec: FamilySpec) -> Hypergraph:
    names, edges = _build(spec)
    return make_hypergraph(len(names), edges)


def family_variable_names(spec: FamilySpec) -> list[str]:
    """Variable names matching the construction, e.g. v1, u2_1 or y3."""
    return _build(spec)[0]
