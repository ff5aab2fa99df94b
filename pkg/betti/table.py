"""Graded Betti tables."""

from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from homology.field import FieldSpec


class BettiKind(str, Enum):
    MINIMAL = "minimal"
    TAYLOR = "taylor"


@dataclass(frozen=True)
class BettiTable:
    """Nonzero entries ((i, a), count) of a resolution of I, sorted by (i, a).

    Index i is homological (i = 0 counts generators), a is the internal degree.
    """

    kind: BettiKind
    n: int
    entries: tuple[tuple[tuple[int, int], int], ...] = ()
    field: FieldSpec | None = None

    @classmethod
    def from_counts(
        cls,
        kind: BettiKind,
        n: int,
        counts: Mapping[tuple[int, int], int],
        field: FieldSpec | None = None,
    ) -> "BettiTable":
        entries = tuple(sorted((key, value) for key, value in counts.items() if value))
        return cls(kind=kind, n=n, entries=entries, field=field)

    @cached_property
    def _lookup(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._lookup.get(key, 0)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._lookup)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({a for (_, a), _ in self.entries}))

    @property
    def max_index(self) -> int:
        """Largest i with a nonzero entry, -1 for the empty table."""
        return max((i for (i, _), _ in self.entries), default=-1)

    def total(self) -> tuple[int, ...]:
        totals = [0] * (self.max_index + 1)
        for (i, _), value in self.entries:
            totals[i] += value
        return tuple(totals)

    def alternating_sum(self, a: int) -> int:
        """sum_i (-1)^i entries[(i, a)]."""
        return sum(-value if i % 2 else value for (i, deg), value in self.entries if deg == a)

    def dominated_by(self, other: "BettiTable") -> bool:
        """True when every entry is at most the matching entry of `other`."""
        return all(value <= other[key] for key, value in self.entries)


def total_betti(table: BettiTable) -> tuple[int, ...]:
    """beta_i = sum_a beta_{i,a}, for i = 0..max index."""
    return table.total()
