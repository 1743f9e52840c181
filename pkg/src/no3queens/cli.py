"""Command line interface.

Each subcommand writes exactly one JSON document to stdout (``table`` in
tsv format and ``render`` write their output directly instead) and a
short human summary to stderr.

Exit codes:

    0    success; for verify/audit the placement is good
    1    placement is not good
    2    goodness refuted with a certificate
    3    bad input: arguments, files, or placement documents
    4    preconditions for the requested analysis not met
    5    node budget exhausted before an exact answer
    6    internal defect
    130  interrupted
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass

from .audit import audit
from .documents import DocumentError, line_document, parse_placement_document
from .geometry import BoardRangeError, InvalidPlacementError, Placement
from .nullstellensatz import (
    BoundNotApplicableError,
    PlannerError,
    refute_goodness,
)
from .render import render_board
from .search import (
    InconclusiveSearchError,
    SearchConfig,
    lower_bound,
    resolve_worker_count,
    solve_min_good,
)
from .verify import verify_placement

EXIT_OK = 0
EXIT_NOT_GOOD = 1
EXIT_REFUTED = 2
EXIT_INPUT = 3
EXIT_PRECONDITION = 4
EXIT_INCONCLUSIVE = 5
EXIT_DEFECT = 6
EXIT_INTERRUPT = 130


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of sys.exit(2); 2 is taken by the refuted verdict
    def error(self, message):
        raise _ArgumentError(message)


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    sys.stdout.flush()


def _read_placement(path: str) -> tuple[Placement, dict]:
    if path == "-":
        return parse_placement_document(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return parse_placement_document(handle.read())


def _squares_doc(squares) -> list[list[int]]:
    return [list(sq) for sq in sorted(squares)]


def _stats_doc(stats) -> dict:
    doc = asdict(stats)
    doc["elapsed"] = round(doc["elapsed"], 3)
    return doc


def _config_from_args(args) -> SearchConfig:
    return SearchConfig(
        worker_count=resolve_worker_count(args.workers),
        node_budget=args.node_budget,
        symmetry_reduction=not args.no_symmetry_reduction,
        coverage_prune=not args.no_coverage_prune,
    )


def _add_search_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                     help="worker processes (default: all cores)")
    sub.add_argument("--node-budget", type=int, default=None, metavar="NODES",
                     help="abort with bounds once this many search nodes are spent")
    sub.add_argument("--no-symmetry-reduction", action="store_true",
                     help="search all first-queen positions, not one per symmetry class")
    sub.add_argument("--no-coverage-prune", action="store_true",
                     help="disable the coverage forward check")


@dataclass(frozen=True)
class TableEntry:
    n: int
    lower_bound: int
    minimum: int | None
    minimum_at_least: int | None
    minimum_at_most: int | None
    witness: Placement | None
    nodes: int
    elapsed: float

    def document(self) -> dict:
        doc: dict = {"n": self.n, "lower_bound": self.lower_bound}
        if self.minimum is not None:
            doc["minimum"] = self.minimum
            doc["witness"] = _squares_doc(self.witness.queens)
        else:
            doc["minimum_at_least"] = self.minimum_at_least
            doc["minimum_at_most"] = self.minimum_at_most
        doc["nodes"] = self.nodes
        doc["elapsed"] = round(self.elapsed, 3)
        return doc

    def cell(self) -> str:
        if self.minimum is not None:
            return str(self.minimum)
        return f"[{self.minimum_at_least},{self.minimum_at_most}]"


@dataclass(frozen=True)
class TableResult:
    entries: tuple[TableEntry, ...]

    @property
    def complete(self) -> bool:
        return all(entry.minimum is not None for entry in self.entries)

    def documents(self) -> list[dict]:
        return [entry.document() for entry in self.entries]

    def tsv_text(self) -> str:
        head = "\t".join(["n"] + [str(entry.n) for entry in self.entries])
        body = "\t".join(["minimum"] + [entry.cell() for entry in self.entries])
        return head + "\n" + body


def run_table(n_from: int, n_to: int, config: SearchConfig | None = None) -> TableResult:
    """Minimum good placement sizes for every board side in [n_from, n_to].

    Rows the node budget cannot settle become [at_least, at_most] brackets;
    later rows are still attempted, each within its own budget.
    """
    if n_from < 1 or n_to < n_from:
        raise BoardRangeError(f"bad board range [{n_from}, {n_to}]")
    config = config or SearchConfig()
    entries = []
    for n in range(n_from, n_to + 1):
        try:
            result = solve_min_good(n, config)
            entries.append(TableEntry(
                n=n, lower_bound=lower_bound(n), minimum=result.minimum,
                minimum_at_least=None, minimum_at_most=None,
                witness=result.witness, nodes=result.stats.nodes,
                elapsed=result.stats.elapsed))
        except InconclusiveSearchError as exc:
            lo, hi = exc.bracket
            entries.append(TableEntry(
                n=n, lower_bound=lower_bound(n), minimum=None,
                minimum_at_least=lo, minimum_at_most=hi,
                witness=None, nodes=exc.nodes, elapsed=0.0))
    return TableResult(tuple(entries))


def _cmd_solve(args) -> int:
    config = _config_from_args(args)
    try:
        result = solve_min_good(args.n, config)
    except InconclusiveSearchError as exc:
        lo, hi = exc.bracket
        _say(f"budget exhausted after {exc.nodes} nodes; "
             f"minimum on B_{args.n} lies in [{lo}, {hi}]")
        _emit({
            "command": "solve",
            "n": args.n,
            "lower_bound": lower_bound(args.n),
            "minimum_at_least": lo,
            "minimum_at_most": hi,
            "nodes": exc.nodes,
        })
        return EXIT_INCONCLUSIVE
    if args.figure:
        from .figures import save_board_figure
        save_board_figure(
            result.witness, args.figure,
            title=f"{result.minimum} queens on the {args.n}x{args.n} board")
        _say(f"figure written to {args.figure}")
    _say(f"minimum good placement on B_{args.n}: {result.minimum} queens "
         f"({result.stats.nodes} nodes, {result.stats.elapsed:.2f}s, "
         f"{result.stats.workers} workers)")
    _emit({
        "command": "solve",
        "n": args.n,
        "lower_bound": lower_bound(args.n),
        "minimum": result.minimum,
        "witness": _squares_doc(result.witness.queens),
        "stats": _stats_doc(result.stats),
    })
    return EXIT_OK


def _cmd_verify(args) -> int:
    placement, _ = _read_placement(args.placement)
    report = verify_placement(placement)
    if report.good:
        _say(f"good: {report.q} queens on B_{report.n}, no three in a line, "
             "no addable square")
    elif not report.no_three:
        line = report.violating_line
        _say(f"not good: three queens on line {line.slope} offset {line.offset}")
    else:
        sq = min(report.addable)
        _say(f"not good: {len(report.addable)} addable square(s), "
             f"for example ({sq[0]}, {sq[1]})")
    _emit({
        "command": "verify",
        "n": report.n,
        "q": report.q,
        "no_three_in_line": report.no_three,
        "violating_line": (line_document(report.violating_line)
                           if report.violating_line else None),
        "addable": _squares_doc(report.addable),
        "good": report.good,
    })
    return EXIT_OK if report.good else EXIT_NOT_GOOD


def _cmd_refute(args) -> int:
    placement, _ = _read_placement(args.placement)
    cert = refute_goodness(placement)
    plan = cert.plan
    wx, wy = cert.witness
    noun = "queen" if cert.q == 1 else "queens"
    _say(f"refuted: ({wx}, {wy}) is addable, so {cert.q} {noun} on "
         f"B_{cert.n} cannot be good (coefficient {cert.coefficient} "
         f"at x^{plan.monomial[0]} y^{plan.monomial[1]})")
    _emit({
        "command": "refute",
        "n": cert.n,
        "q": cert.q,
        "q_prime": cert.q_prime,
        "lower_bound": lower_bound(cert.n),
        "monomial": list(plan.monomial),
        "coefficient": cert.coefficient,
        "targets": dict(plan.targets),
        "lines": {
            "defined": [line_document(line) for line in plan.type1],
            "isolated": [{"line": line_document(line), "queen": list(queen)}
                         for line, queen in plan.type2],
            "padding": [line_document(line) for line in plan.type3],
        },
        "witness": [wx, wy],
    })
    return EXIT_REFUTED


def _cmd_audit(args) -> int:
    placement, _ = _read_placement(args.placement)
    report = audit(placement)
    doc = asdict(report)
    doc = {"command": "audit", **doc}
    for key in ("col_indices", "row_indices"):
        doc[key] = list(doc[key])
    verdict = "good" if report.good else "not good"
    _say(f"audit of {report.q} queens on B_{report.n} ({verdict}): "
         f"q'' = {report.q_dd}, defined columns = {report.col_count}, "
         f"defined rows = {report.row_count}"
         + (" (frame rotated)" if report.rotated else ""))
    if report.bound_holds is not None:
        _say(f"counting bound: {report.inequality_lhs} >= "
             f"{report.inequality_rhs_chain} "
             + ("holds" if report.bound_holds else "FAILS"))
    _emit(doc)
    if report.good and (report.bound_holds is False
                        or report.degenerate_bound_holds is False):
        _say("internal defect: a proven bound failed on a good placement")
        return EXIT_DEFECT
    return EXIT_OK if report.good else EXIT_NOT_GOOD


def _cmd_table(args) -> int:
    if args.start < 1 or args.n < args.start:
        raise _ArgumentError(f"bad board range [{args.start}, {args.n}]")
    config = _config_from_args(args)
    result = run_table(args.start, args.n, config)
    for entry in result.entries:
        _say(f"n={entry.n}: minimum {entry.cell()} "
             f"({entry.nodes} nodes, {entry.elapsed:.2f}s)")
    if args.figure:
        from .figures import save_table_figure
        save_table_figure(result.documents(), args.figure,
                          title="minimum good placement size")
        _say(f"figure written to {args.figure}")
    if args.format == "tsv":
        sys.stdout.write(result.tsv_text() + "\n")
        sys.stdout.flush()
    else:
        _emit({"command": "table", "entries": result.documents()})
    return EXIT_OK if result.complete else EXIT_INCONCLUSIVE


def _cmd_render(args) -> int:
    placement, metadata = _read_placement(args.placement)
    text = render_board(placement, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        _say(f"{args.format} board written to {args.out}")
    else:
        sys.stdout.write(text + "\n")
        sys.stdout.flush()
        label = metadata.get("label")
        if label:
            _say(label)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="no3queens",
        description="Exact solver and certificates for minimum saturated "
                    "queen placements with no three in a line.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser(
        "solve", help="compute the minimum good placement size on B_n")
    p_solve.add_argument("n", type=int, help="board side")
    _add_search_options(p_solve)
    p_solve.add_argument("--figure", metavar="PATH",
                         help="also draw the witness board to an image file")
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser(
        "verify", help="check a placement document for goodness")
    p_verify.add_argument("placement", help="placement JSON file, or - for stdin")
    p_verify.set_defaults(func=_cmd_verify)

    p_refute = sub.add_parser(
        "refute",
        help="build a Nullstellensatz certificate that a small placement "
             "is not good")
    p_refute.add_argument("placement", help="placement JSON file, or - for stdin")
    p_refute.set_defaults(func=_cmd_refute)

    p_audit = sub.add_parser(
        "audit", help="run the elementary counting audit on a placement")
    p_audit.add_argument("placement", help="placement JSON file, or - for stdin")
    p_audit.set_defaults(func=_cmd_audit)

    p_table = sub.add_parser(
        "table", help="tabulate minimum sizes for a range of board sides")
    p_table.add_argument("n", type=int, help="largest board side")
    p_table.add_argument("--from", dest="start", type=int, default=1,
                         metavar="N", help="smallest board side (default 1)")
    _add_search_options(p_table)
    p_table.add_argument("--format", choices=("tsv", "json"), default="tsv",
                         help="stdout format (default tsv)")
    p_table.add_argument("--figure", metavar="PATH",
                         help="also draw the table as a chart image file")
    p_table.set_defaults(func=_cmd_table)

    p_render = sub.add_parser("render", help="draw a placement document")
    p_render.add_argument("placement", help="placement JSON file, or - for stdin")
    p_render.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p_render.add_argument("--out", metavar="PATH",
                          help="write to a file instead of stdout")
    p_render.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentError as exc:
        _say(f"error: {exc}")
        return EXIT_INPUT
    except SystemExit as exc:
        # --help and --version exit through argparse
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _ArgumentError as exc:
        _say(f"error: {exc}")
        return EXIT_INPUT
    except DocumentError as exc:
        _say(f"error in placement document ({exc.kind}): {exc}")
        return EXIT_INPUT
    except OSError as exc:
        _say(f"error: {exc}")
        return EXIT_INPUT
    except (InvalidPlacementError, BoundNotApplicableError) as exc:
        _say(f"precondition failed: {exc}")
        return EXIT_PRECONDITION
    except PlannerError as exc:
        _say(f"internal defect: {exc}")
        return EXIT_DEFECT
    except (BoardRangeError, ValueError) as exc:
        _say(f"error: {exc}")
        return EXIT_INPUT
    except KeyboardInterrupt:
        _say("interrupted")
        return EXIT_INTERRUPT


def run() -> None:
    raise SystemExit(main())
