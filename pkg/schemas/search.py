"""Search result models."""

from pydantic import BaseModel, Field

from config import SCHEMA_VERSION


class ClassSummary(BaseModel):
    """One isomorphism class found by a search."""

    canonical: str = Field(..., description="Hex of the canonical form")
    n: int
    edges: list[list[int]]
    values: dict[str, int] = Field(default_factory=dict, description="Computed invariants, e.g. beta_2_6")


class SurveyDocument(BaseModel):
    """Classes found by one survey run."""

    schema_version: str = SCHEMA_VERSION
    t: int
    classes: list[ClassSummary] = Field(default_factory=list)
