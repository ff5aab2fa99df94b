"""Verification report models."""

from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, Field, computed_field

from config import SCHEMA_VERSION


class Verdict(str, Enum):
    HOLDS = "holds"
    EQUALITY = "holds_with_equality"
    VIOLATED = "violated"


class Relation(str, Enum):
    """How `computed` must relate to `bound`."""

    AT_MOST = "<="
    AT_LEAST = ">="
    EQUAL = "=="


class Comparison(BaseModel):
    """One computed value checked against one bound."""

    label: str = Field(..., description="Index of the comparison, e.g. j=2 or beta_{2,5}")
    relation: Relation
    computed: int
    bound: int

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verdict(self) -> Verdict:
        if self.relation is Relation.EQUAL:
            return Verdict.EQUALITY if self.computed == self.bound else Verdict.VIOLATED
        if self.relation is Relation.AT_MOST:
            ok = self.computed <= self.bound
        else:
            ok = self.computed >= self.bound
        if not ok:
            return Verdict.VIOLATED
        return Verdict.EQUALITY if self.computed == self.bound else Verdict.HOLDS


class Report(BaseModel):
    """Outcome of a bound verification, oracle run, or search.

    The verdict is derived from the stored comparisons and named checks only.
    """

    schema_version: str = SCHEMA_VERSION
    theorem: str
    status: Literal["theorem", "evidence", "oracle", "reproduction"] = "theorem"
    field: str | None = None
    subject: str | None = None
    comparisons: list[Comparison] = Field(default_factory=list)
    checks: dict[str, bool] = Field(default_factory=dict)
    witnesses: dict[str, Any] = Field(default_factory=dict)
    notes: list[str] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verdict(self) -> Verdict:
        if any(c.verdict is Verdict.VIOLATED for c in self.comparisons):
            return Verdict.VIOLATED
        if not all(self.checks.values()):
            return Verdict.VIOLATED
        if self.comparisons and all(c.verdict is Verdict.EQUALITY for c in self.comparisons):
            return Verdict.EQUALITY
        return Verdict.HOLDS

    @computed_field  # type: ignore[prop-decorator]
    @property
    def strict(self) -> list[str]:
        """Labels of comparisons that hold strictly."""
        return [c.label for c in self.comparisons if c.verdict is Verdict.HOLDS]

    def violations(self) -> list[Comparison]:
        return [c for c in self.comparisons if c.verdict is Verdict.VIOLATED]
