"""JSON envelopes for the color and witness commands."""

from pydantic import BaseModel, Field

from config import SCHEMA_VERSION


class ColoringDocument(BaseModel):
    schema_version: str = SCHEMA_VERSION
    d: int
    colorable: bool
    colors: list[int] = Field(default_factory=list, description="Color of vertex v at position v - 1")
    class_sizes: list[int] = Field(default_factory=list)


class WitnessDocument(BaseModel):
    """Output of the witness construction for one blue class."""

    schema_version: str = SCHEMA_VERSION
    blue: int
    u_prime: list[int]
    b_prime: list[int]
    deleted: list[int] = Field(..., description="Vertices removed, in deletion order")
    homology_degree: int
    reduced_betti: int
