"""Ideal documents exchanged through files."""

from pydantic import BaseModel, Field

from hypercomb.hypergraph import Hypergraph, make_hypergraph


class IdealDocument(BaseModel):
    """Generator supports of a squarefree monomial ideal plus optional variable names."""

    n: int = Field(..., ge=0, description="Number of variables")
    edges: list[list[int]] = Field(default_factory=list, description="Generator supports, 1-based")
    names: list[str] | None = Field(default=None, description="Variable names; default x1..xn")
    provenance: str = Field(default="", description="File path or family spec")

    def variable_names(self) -> list[str]:
        return self.names or [f"x{i}" for i in range(1, self.n + 1)]

    def to_hypergraph(self) -> Hypergraph:
        return make_hypergraph(self.n, self.edges)

    @classmethod
    def from_hypergraph(
        cls,
        G: Hypergraph,
        names: list[str] | None = None,
        provenance: str = "",
    ) -> "IdealDocument":
        return cls(
            n=G.n,
            edges=[sorted(e) for e in G.edges],
            names=names,
            provenance=provenance,
        )

    def same_ideal(self, other: "IdealDocument") -> bool:
        """Equal up to provenance."""
        return (self.n, self.edges, self.names) == (other.n, other.edges, other.names)
