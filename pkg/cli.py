#!/usr/bin/env python3
"""bettilab command line: ideal formats, Betti diagrams and subcommand dispatch."""

import argparse
import json
import re
import sys
from pathlib import Path
from typing import NoReturn, TextIO

from pydantic import ValidationError

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from config import SCHEMA_VERSION  # noqa: E402
from errors import BettiLabError, CapExceeded, NotSquarefree, ParseError  # noqa: E402
from schemas.ideal import IdealDocument  # noqa: E402

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATED = 2
EXIT_CAP = 3

FORMATS = ("auto", "monomials", "indices", "json")

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_X_INDEXED = re.compile(r"^x(\d+)$")
_JUXTAPOSED = re.compile(r"^(?:x\d+)+$")


# ideal documents


class _Lines:
    """Non-comment lines of a text document plus its `#@` pragmas."""

    def __init__(self, text: str) -> None:
        self.n: int | None = None
        self.names: list[str] | None = None
        self.rows: list[tuple[int, str]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if stripped.startswith("#@"):
                self._pragma(stripped[2:].strip(), number)
                continue
            body = raw.split("#", 1)[0]
            if body.strip():
                self.rows.append((number, body))

    def _pragma(self, text: str, line: int) -> None:
        key, _, value = text.partition("=")
        key, value = key.strip(), value.strip()
        if key == "n":
            if not value.isdigit():
                raise ParseError(f"pragma n needs a nonnegative integer, got {value!r}", line, 1)
            self.n = int(value)
        elif key == "names":
            names = [v.strip() for v in value.split(",")] if value else []
            bad = [v for v in names if not _NAME.match(v)]
            if bad or len(set(names)) != len(names):
                raise ParseError(f"bad variable names {value!r}", line, 1)
            self.names = names
        # unknown pragmas are plain comments


def _tokens(body: str, sep: str | None) -> list[tuple[int, str]]:
    """Tokens with their 1-based columns."""
    pattern = r"[^*\s]+" if sep == "*" else r"\S+"
    return [(m.start() + 1, m.group()) for m in re.finditer(pattern, body)]


def _finish(lines: _Lines, edges: list[list[int]], names: list[str] | None, provenance: str) -> IdealDocument:
    top = max((v for e in edges for v in e), default=0)
    if names is not None:
        top = max(top, len(names))
    n = lines.n if lines.n is not None else top
    if n < top:
        raise ParseError(f"pragma n={n} is smaller than the largest variable index {top}", 1, 1)
    if names is not None and len(names) < n:
        names = names + [f"x{i}" for i in range(len(names) + 1, n + 1)]
    doc = IdealDocument(n=n, edges=edges, names=names, provenance=provenance)
    doc.to_hypergraph()
    return doc


def _parse_indices(lines: _Lines, provenance: str) -> IdealDocument:
    edges: list[list[int]] = []
    for line, body in lines.rows:
        edge: list[int] = []
        for column, token in _tokens(body, None):
            if not token.isdigit() or int(token) < 1:
                raise ParseError(f"expected a vertex index >= 1, got {token!r}", line, column)
            if int(token) in edge:
                raise NotSquarefree(f"vertex {token} repeated in one generator", line, column)
            edge.append(int(token))
        edges.append(sorted(edge))
    return _finish(lines, edges, lines.names, provenance)


def _split_monomial(body: str, line: int) -> list[tuple[int, str]]:
    stripped = body.strip()
    offset = body.index(stripped) + 1
    if "*" not in stripped and _JUXTAPOSED.match(stripped):
        return [(offset + m.start(), m.group()) for m in re.finditer(r"x\d+", stripped)]
    tokens = _tokens(body, "*")
    if not tokens:
        raise ParseError("empty generator", line, 1)
    return tokens


def _parse_monomials(lines: _Lines, provenance: str) -> IdealDocument:
    names = list(lines.names) if lines.names is not None else None
    rows = [(line, _split_monomial(body, line)) for line, body in lines.rows]
    all_x = names is None and all(_X_INDEXED.match(tok.split("^")[0]) for _, toks in rows for _, tok in toks)
    if not all_x and names is None:
        names = []

    edges: list[list[int]] = []
    for line, toks in rows:
        edge: list[int] = []
        for column, token in toks:
            name, caret, power = token.partition("^")
            if caret:
                if not power.isdigit():
                    raise ParseError(f"bad exponent in {token!r}", line, column)
                if int(power) > 1:
                    raise NotSquarefree(f"{token} is not squarefree", line, column)
                if int(power) == 0:
                    continue
            if name == "1":
                raise ParseError("constant generator; the ideal would be the unit ideal", line, column)
            if names is None:
                v = int(_X_INDEXED.match(name).group(1))  # type: ignore[union-attr]
                if v < 1:
                    raise ParseError(f"variable {name} has index 0", line, column)
            else:
                if not _NAME.match(name):
                    raise ParseError(f"bad variable name {name!r}", line, column)
                if name not in names:
                    names.append(name)
                v = names.index(name) + 1
            if v in edge:
                raise NotSquarefree(f"variable {name} repeated in one generator", line, column)
            edge.append(v)
        if not edge:
            raise ParseError("empty generator", line, 1)
        edges.append(sorted(edge))
    return _finish(lines, edges, names, provenance)


def _parse_json(text: str, provenance: str) -> IdealDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object with n and edges", 1, 1)
    data.pop("schema_version", None)
    data.setdefault("provenance", provenance)
    try:
        doc = IdealDocument.model_validate(data)
    except ValidationError as e:
        raise ParseError(str(e.errors()[0]["msg"]), 1, 1) from None
    for edge in doc.edges:
        if len(set(edge)) != len(edge):
            raise NotSquarefree(f"generator {edge} repeats a variable", 1, 1)
    doc.edges = [sorted(e) for e in doc.edges]
    doc.to_hypergraph()
    return doc


def detect_format(text: str) -> str:
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("{"):
            return "json"
        if all(tok.isdigit() for tok in body.split()):
            return "indices"
        return "monomials"
    if text.lstrip().startswith("{"):
        return "json"
    return "monomials"


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise ParseError(f"invalid UTF-8 at byte {e.start}", line, column) from None


def parse_ideal(text: str | bytes, format: str = "auto", provenance: str = "") -> IdealDocument:
    """Parse an ideal in the monomials, indices or json format."""
    if isinstance(text, bytes):
        text = _decode(text)
    if format not in FORMATS:
        raise ParseError(f"unknown format {format!r}")
    kind = detect_format(text) if format == "auto" else format
    if kind == "json":
        return _parse_json(text, provenance)
    lines = _Lines(text)
    if kind == "indices":
        return _parse_indices(lines, provenance)
    return _parse_monomials(lines, provenance)


def format_ideal(doc: IdealDocument, style: str = "monomials") -> str:
    """Inverse of parse_ideal: parse_ideal(format_ideal(doc, s), s) equals doc."""
    if style == "json":
        payload = {"schema_version": SCHEMA_VERSION, "n": doc.n, "edges": doc.edges}
        if doc.names is not None:
            payload["names"] = doc.names
        if doc.provenance:
            payload["provenance"] = doc.provenance
        return json.dumps(payload, indent=2) + "\n"
    out = []
    if doc.provenance:
        out.append(f"# {doc.provenance}")
    out.append(f"#@ n={doc.n}")
    if doc.names is not None:
        out.append(f"#@ names={','.join(doc.names)}")
    names = doc.variable_names()
    for edge in doc.edges:
        if style == "indices":
            out.append(" ".join(map(str, edge)))
        else:
            out.append("*".join(names[v - 1] for v in edge))
    return "\n".join(out) + "\n"


# Betti tables


def betti_table_payload(table) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": table.kind.value,
        "field": table.field.label if table.field is not None else None,
        "n": table.n,
        "entries": [{"i": i, "a": a, "value": value} for (i, a), value in table.entries],
        "totals": list(table.total()),
    }


def format_betti_table(table, style: str = "diagram") -> str:
    """Betti diagram (rows are strands a - i, columns are i) or JSON."""
    if style == "json":
        return json.dumps(betti_table_payload(table), indent=2) + "\n"
    columns = list(range(max(table.max_index, 0) + 1))
    strands = sorted({a - i for (i, a), _ in table.entries})
    totals = table.total()

    def cell(value: int) -> str:
        return str(value) if value else "."

    grid = [["total:", *(cell(totals[i] if i < len(totals) else 0) for i in columns)]]
    for s in strands:
        grid.append([f"{s}:", *(cell(table[(i, i + s)]) for i in columns)])
    label_width = max(len(row[0]) for row in grid)
    width = max(len(c) for row in grid for c in row[1:])
    header = " " * label_width + "".join(f" {i:>{width}}" for i in columns)
    lines = [header]
    for row in grid:
        lines.append(f"{row[0]:>{label_width}}" + "".join(f" {c:>{width}}" for c in row[1:]))
    return "\n".join(lines) + "\n"


# shared command helpers


def read_document(path: str, format: str = "auto") -> IdealDocument:
    """Read an ideal from a file, or from stdin when path is '-'."""
    if path == "-":
        stream = getattr(sys.stdin, "buffer", sys.stdin)
        return parse_ideal(stream.read(), format, provenance="<stdin>")
    try:
        text = Path(path).read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    return parse_ideal(text, format, provenance=path)


def resolve_threads(args: argparse.Namespace) -> int:
    from config import THREADS

    return args.threads if getattr(args, "threads", None) else THREADS


def report_progress(visited: int, found: int, stream: TextIO = sys.stderr) -> None:
    print(f"progress: {visited} nodes visited, {found} classes found", file=stream, flush=True)


def cmd_betti(args: argparse.Namespace) -> int:
    """Print the minimal (or Taylor) Betti table of an ideal."""
    from betti import betti_table, taylor_table
    from homology.field import FieldSpec

    G = read_document(args.file, args.format).to_hypergraph()
    if args.taylor:
        table = taylor_table(G)
    else:
        table = betti_table(G, FieldSpec.parse(args.field), prune=not args.no_prune, workers=resolve_threads(args))
    sys.stdout.write(format_betti_table(table, "json" if args.json else "diagram"))
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    """Print a proper coloring, or 'not colorable'."""
    from hypercomb.coloring import proper_coloring

    doc = read_document(args.file, args.format)
    G = doc.to_hypergraph()
    d = args.d or G.degree
    coloring = proper_coloring(G, d)
    if args.json:
        from schemas.results import ColoringDocument

        if coloring is None:
            out = ColoringDocument(d=d, colorable=False)
        else:
            out = ColoringDocument(
                d=d, colorable=True, colors=list(coloring.colors), class_sizes=list(coloring.class_sizes())
            )
        print(out.model_dump_json(indent=2))
        return EXIT_OK
    if coloring is None:
        print("not colorable")
        return EXIT_OK
    names = doc.variable_names()
    for c in range(1, d + 1):
        members = " ".join(names[v - 1] for v in sorted(coloring.color_class(c)))
        print(f"color {c}: {members}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    """Write a named family member as an ideal document."""
    from atlas.families import FamilySpec, family_variable_names, generate

    spec = FamilySpec.parse(args.family, args.params)
    G = generate(spec)
    names = family_variable_names(spec)
    default = [f"x{i}" for i in range(1, G.n + 1)]
    doc = IdealDocument.from_hypergraph(G, names=None if names == default else names, provenance=str(spec))
    text = format_ideal(doc, args.output_format)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_turan(args: argparse.Namespace) -> int:
    """Print the Turan number T(n, k, l)."""
    from bounds.turan import turan_number

    print(turan_number(args.n, args.k, args.l))
    return EXIT_OK


class UsageParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1; 2 means a violated bound."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = UsageParser(prog="bettilab", description="Betti numbers of squarefree monomial ideals")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=UsageParser)

    def ideal_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="Ideal file, or - for stdin")
        p.add_argument("--format", choices=FORMATS, default="auto", help="Input format")

    def field_option(p: argparse.ArgumentParser) -> None:
        from config import DEFAULT_FIELD

        p.add_argument("--field", default=DEFAULT_FIELD, help="Coefficient field: q or gf:P")

    def threads_option(p: argparse.ArgumentParser) -> None:
        p.add_argument("--threads", type=int, default=None, help="Worker processes (default: BETTILAB_THREADS or all cores)")

    betti = sub.add_parser("betti", help="Graded Betti table of an ideal")
    ideal_input(betti)
    field_option(betti)
    threads_option(betti)
    betti.add_argument("--taylor", action="store_true", help="Taylor resolution instead of the minimal one")
    betti.add_argument("--no-prune", action="store_true", help="Sum over all vertex subsets")
    betti.add_argument("--json", action="store_true", help="JSON output")
    betti.set_defaults(func=cmd_betti)

    color = sub.add_parser("color", help="Proper coloring of the hypergraph")
    ideal_input(color)
    color.add_argument("-d", type=int, default=None, help="Number of colors (default: the degree)")
    color.add_argument("--json", action="store_true", help="JSON output")
    color.set_defaults(func=cmd_color)

    gen = sub.add_parser("gen", help="Generate a member of a named family")
    gen.add_argument("family", help="extremal_hypertree, path, beta35_extremal, taylor_equality, degree3_unique, b36_extremal")
    gen.add_argument("params", nargs="*", help="Family parameters")
    gen.add_argument("-o", "--output", help="Output file (default: stdout)")
    gen.add_argument("--output-format", choices=FORMATS[1:], default="monomials", help="Output format")
    gen.set_defaults(func=cmd_gen)

    turan = sub.add_parser("turan", help="Turan number T(n,k,l) by brute force")
    turan.add_argument("--n", type=int, required=True)
    turan.add_argument("--k", type=int, required=True)
    turan.add_argument("--l", type=int, required=True)
    turan.set_defaults(func=cmd_turan)

    # Verification, search and archive commands
    from cli_commands import cmd_check, cmd_reports, cmd_search, cmd_witness

    check = sub.add_parser("check", help="Verify a bound against computed Betti numbers")
    check.add_argument("theorem", choices=["tree_lb", "forest_lb", "beta35", "b36", "diameter_eq"])
    ideal_input(check)
    field_option(check)
    threads_option(check)
    check.add_argument("--json", action="store_true", help="JSON report")
    check.add_argument("--save", action="store_true", help="Archive the report")
    check.set_defaults(func=cmd_check)

    witness = sub.add_parser("witness", help="Witness subset for the hypertree lower bound")
    ideal_input(witness)
    field_option(witness)
    witness.add_argument("--blue", type=int, required=True, help="Color class playing blue")
    witness.add_argument("--bprime", required=True, help="Comma-separated blue vertices (indices)")
    witness.add_argument("--json", action="store_true", help="JSON output")
    witness.set_defaults(func=cmd_witness)

    search = sub.add_parser("search", help="Exhaustive searches over degree-3 ideals")
    search.add_argument("kind", choices=["section4", "uniqueness", "triple-union", "conjecture"])
    search.add_argument("--t", type=int, default=None, help="Edge count (triple-union) or t_max (conjecture)")
    search.add_argument("--budget", type=int, default=None, help="Node budget (default: BETTILAB_SEARCH_BUDGET)")
    search.add_argument("--samples", type=int, default=200, help="Random samples per t beyond the exhaustive range")
    search.add_argument("--seed", type=int, default=0)
    field_option(search)
    threads_option(search)
    search.add_argument("--json", action="store_true", help="JSON output")
    search.add_argument("--save", action="store_true", help="Archive the report")
    search.set_defaults(func=cmd_search)

    reports = sub.add_parser("reports", help="List archived reports")
    reports.add_argument("--limit", "-n", type=int, default=10, help="Limit")
    reports.add_argument("--theorem", default=None, help="Only this theorem")
    reports.add_argument("--show", type=int, default=None, help="Print one report in full")
    reports.set_defaults(func=cmd_reports)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, dispatch, and map errors to exit statuses."""
    from observability import configure_logfire

    args = build_parser().parse_args(argv)
    configure_logfire()
    try:
        return args.func(args)
    except CapExceeded as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_CAP
    except BettiLabError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
