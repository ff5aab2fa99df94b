"""Example: reproduce the degree-3 exhaustive search and archive the report.

Usage: python -m bettilab.examples.02_degree3_uniqueness [--field gf:2] [--budget N]
"""

import argparse
import asyncio
import sys

from bettilab import FieldSpec, ReportStore, reproduce_degree3_uniqueness
from cli import report_progress
from cli_commands import format_report
from observability import configure_logfire, log_report_async


async def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--field", default="q")
    parser.add_argument("--budget", type=int, default=None)
    args = parser.parse_args()

    configure_logfire()
    report = reproduce_degree3_uniqueness(FieldSpec.parse(args.field), budget=args.budget, progress=report_progress)
    print(format_report(report))

    store = ReportStore()
    await store.init_db()
    record = await log_report_async(store, report)
    await store.close()
    print(f"archived as report {record}", file=sys.stderr)


if __name__ == "__main__":
    asyncio.run(main())
