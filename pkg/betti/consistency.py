"""Cross-check of the minimal and Taylor engines."""

from hypercomb.hypergraph import Hypergraph
from homology.field import QQ, FieldSpec
from betti.hochster import betti_table
from betti.taylor import taylor_table
from schemas.report import Comparison, Relation, Report


def euler_consistency(G: Hypergraph, field: FieldSpec = QQ, workers: int | None = None) -> Report:
    """Both tables resolve I(G), so their alternating sums agree degree by degree."""
    minimal = betti_table(G, field, workers=workers)
    taylor = taylor_table(G)
    degrees = sorted(set(minimal.degrees) | set(taylor.degrees))
    return Report(
        theorem="euler_consistency",
        status="oracle",
        field=field.label,
        subject=str(G),
        comparisons=[
            Comparison(
                label=f"a={a}",
                relation=Relation.EQUAL,
                computed=minimal.alternating_sum(a),
                bound=taylor.alternating_sum(a),
            )
            for a in degrees
        ],
        checks={"minimal_dominated_by_taylor": minimal.dominated_by(taylor)},
    )
