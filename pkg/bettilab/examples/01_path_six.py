"""Example: the edge ideal of the path on six vertices.

Prints its Betti table and checks the tree lower bound, which holds strictly
at j=2 (7 > 6) because the path has diameter 5.
"""

from bettilab import FamilySpec, betti_table, generate, total_betti, verify_bound
from atlas.families import Family
from cli import format_betti_table
from cli_commands import format_report


def main() -> None:
    G = generate(FamilySpec(Family.PATH, (6,)))
    table = betti_table(G, workers=1)
    print(format_betti_table(table))
    print(f"total Betti numbers: {total_betti(table)}\n")
    print(format_report(verify_bound("diameter_eq", G, workers=1)))


if __name__ == "__main__":
    main()
