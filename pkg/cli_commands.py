"""Verification, witness, search and archive commands."""

import argparse
import asyncio
import sys
from pathlib import Path

_PROJECT_ROOT = Path(__file__).resolve().parent
if str(_PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(_PROJECT_ROOT))

from cli import EXIT_OK, EXIT_VIOLATED, read_document, report_progress, resolve_threads  # noqa: E402
from errors import BadParams, NotColorable  # noqa: E402
from schemas.report import Report, Verdict  # noqa: E402
from schemas.results import WitnessDocument  # noqa: E402


def format_report(report: Report) -> str:
    """Human-readable report: one line per comparison, then checks and notes."""
    head = f"{report.theorem} [{report.status}]"
    if report.field:
        head += f" over {report.field}"
    lines = [f"{head}: {report.verdict.value}"]
    if report.subject:
        lines.append(f"  ideal: {report.subject}")
    for c in report.comparisons:
        lines.append(f"  {c.label}: {c.computed} {c.relation.value} {c.bound}  {c.verdict.value}")
    for name, ok in report.checks.items():
        lines.append(f"  check {name}: {'ok' if ok else 'FAILED'}")
    lines.extend(report.notes)
    return "\n".join(lines) + "\n"


def _emit(report: Report, as_json: bool) -> int:
    if as_json:
        sys.stdout.write(report.model_dump_json(indent=2) + "\n")
    else:
        sys.stdout.write(format_report(report))
    return EXIT_VIOLATED if report.verdict is Verdict.VIOLATED else EXIT_OK


async def _save(report: Report) -> int | None:
    from archive.report_store import ReportStore
    from observability import log_report_async

    store = ReportStore()
    await store.init_db()
    try:
        return await log_report_async(store, report)
    finally:
        await store.close()


def _finish(report: Report, args: argparse.Namespace) -> int:
    status = _emit(report, args.json)
    if args.save:
        record = asyncio.run(_save(report))
        print(f"archived report {record}", file=sys.stderr)
    return status


def cmd_check(args: argparse.Namespace) -> int:
    """Verify one bound on one ideal."""
    from bounds.verify import verify_bound
    from homology.field import FieldSpec

    G = read_document(args.file, args.format).to_hypergraph()
    report = verify_bound(args.theorem, G, FieldSpec.parse(args.field), workers=resolve_threads(args))
    return _finish(report, args)


def cmd_witness(args: argparse.Namespace) -> int:
    """Run the witness construction for one blue class and one B'."""
    from bounds.witness import witness_subset
    from homology.field import FieldSpec
    from hypercomb.coloring import proper_coloring

    doc = read_document(args.file, args.format)
    G = doc.to_hypergraph()
    try:
        b_prime = [int(v) for v in args.bprime.split(",") if v.strip()]
    except ValueError:
        raise BadParams(f"--bprime takes comma-separated vertex indices, got {args.bprime!r}") from None
    coloring = proper_coloring(G, G.degree)
    if coloring is None:
        raise NotColorable(f"{G} has no proper {G.degree}-coloring")
    result = witness_subset(G, coloring, args.blue, b_prime, FieldSpec.parse(args.field))
    names = doc.variable_names()
    if args.json:
        out = WitnessDocument(
            blue=args.blue,
            u_prime=sorted(result.u_prime),
            b_prime=sorted(result.b_prime),
            deleted=list(result.deleted),
            homology_degree=result.homology_degree,
            reduced_betti=result.reduced_betti,
        )
        print(out.model_dump_json(indent=2))
    else:
        print("U' = {" + ", ".join(names[v - 1] for v in sorted(result.u_prime)) + "}")
        print("W  = (" + ", ".join(names[v - 1] for v in result.deleted) + ")")
        print(f"dim H~_{result.homology_degree} = {result.reduced_betti}")
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    """Run one of the degree-3 searches."""
    from atlas.searches import conjecture_scan, reproduce_degree3_uniqueness, triple_union_survey
    from homology.field import FieldSpec

    field = FieldSpec.parse(args.field)
    workers = resolve_threads(args)
    if args.kind in ("section4", "uniqueness"):
        report = reproduce_degree3_uniqueness(field, budget=args.budget, workers=workers, progress=report_progress)
    elif args.kind == "conjecture":
        report = conjecture_scan(
            args.t or 4,
            field,
            samples=args.samples,
            seed=args.seed,
            budget=args.budget,
            workers=workers,
            progress=report_progress,
        )
    else:
        from atlas.canonical import canonical_form
        from schemas.search import ClassSummary, SurveyDocument

        t = args.t or 6
        classes = triple_union_survey(t, budget=args.budget, workers=workers, progress=report_progress)
        summaries = [
            ClassSummary(canonical=canonical_form(G).hex(), n=G.n, edges=[sorted(e) for e in G.edges])
            for G in classes
        ]
        if args.json:
            print(SurveyDocument(t=t, classes=summaries).model_dump_json(indent=2))
        else:
            print(f"t={t}: {len(classes)} classes")
            for s in summaries:
                print("  " + " ".join("{" + ",".join(map(str, e)) + "}" for e in s.edges))
        return EXIT_OK
    return _finish(report, args)


def cmd_reports(args: argparse.Namespace) -> int:
    """List archived reports, or show one."""
    from archive.report_store import ReportStore

    async def _run() -> int:
        store = ReportStore()
        await store.init_db()
        try:
            if args.show is not None:
                report = await store.get_report(args.show)
                if report is None:
                    print(f"no report with id {args.show}", file=sys.stderr)
                    return 1
                sys.stdout.write(format_report(report))
                return EXIT_OK
            rows = await store.list_reports(limit=args.limit, theorem=args.theorem)
            print(f"Reports: {len(rows)}")
            for r in rows:
                print(f"  #{r['id']} {r['created_at']} {r['theorem']} [{r['status']}] {r['verdict']}")
            return EXIT_OK
        finally:
            await store.close()

    return asyncio.run(_run())
