"""Command-line interface.

Exit codes: 0 success/valid, 1 invalid input or failed verification,
2 proven infeasibility (same-parity corners at even order), 3 search
budget exhausted.  Everything is deterministic; there is no seeded mode.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .assemble import build_square, plan_from_frame, render_frame
from .construct import build_border
from .core import InfeasibleCornersError
from .corners import audit_order4, audit_order_m, construct_with_corners
from .documents import (
    FORMATS,
    GRID,
    JSON,
    DocumentError,
    GridDocument,
    parse_document,
    serialize_grid,
    serialize_plan,
)
from .enumeration import (
    BudgetExhausted,
    NoBorderError,
    OmegaKey,
    SearchBudget,
    count_omega,
    enumerate_omega,
    format_counts,
)
from .transform import SYMMETRIES, apply_symmetry
from .verify import BorderPlan, CheckReport, verify_border, verify_bordered, verify_frame, verify_square

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INFEASIBLE = 2
EXIT_BUDGET = 3

DESK_SCALE_ORDER = 6


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for infeasibility
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _corner_pair(text: str) -> tuple[int, int]:
    try:
        v_text, w_text = text.split(",")
        return int(v_text), int(w_text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"corners must look like V,W (two integers), got {text!r}"
        ) from None


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _print_report(report: CheckReport) -> None:
    if report.valid:
        print("valid")
    else:
        print(f"invalid: {len(report.violations)} violation(s)")
        for violation in report.violations:
            print(f"  {violation}")


def cmd_build(args) -> int:
    if args.corners and not args.border_only:
        raise DocumentError("--corners only applies to --border-only builds")
    if args.border_only:
        n = args.order
        if args.corners:
            if n % 2:
                raise DocumentError(
                    "corner-prescribed borders exist for even inner orders only"
                )
            plan = construct_with_corners(n, *args.corners)
        else:
            plan = build_border(n)
        if args.format == JSON:
            _emit(serialize_plan(plan), args.output)
        else:
            _emit(serialize_grid(render_frame(plan).cells, args.format), args.output)
        return EXIT_OK
    square = build_square(args.order)
    _emit(serialize_grid(square, args.format), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = parse_document(_read_input(args.input))
    if isinstance(doc, BorderPlan):
        report = verify_border(doc)
    elif isinstance(doc, GridDocument) and doc.is_complete():
        square = doc.as_square()
        report = verify_square(square)
        if args.bordered:
            extra = verify_bordered(square)
            merged = report.violations + tuple(
                x for x in extra.violations if x not in report.violations
            )
            report = CheckReport(valid=not merged, violations=merged)
    else:
        report = verify_frame(doc.as_frame())
    _print_report(report)
    return EXIT_OK if report.valid else EXIT_INVALID


def _iter_keys(n: int, corners: tuple[int, int] | None):
    if corners is not None:
        yield OmegaKey(n, *corners)
        return
    small = 2 * n + 2
    for v in range(1, small + 1):
        for w in range(1, small + 1):
            if v != w:
                yield OmegaKey(n, v, w)


def cmd_enumerate(args) -> int:
    n = args.order
    if n > DESK_SCALE_ORDER:
        print(
            f"warning: exhaustive search beyond inner order {DESK_SCALE_ORDER} "
            "can take very long; consider --max-nodes or --max-seconds",
            file=sys.stderr,
        )
    budget = SearchBudget(
        max_nodes=args.max_nodes,
        max_solutions=None,
        max_seconds=args.max_seconds,
    )
    if args.count_only:
        if args.corners:
            count = sum(1 for _ in enumerate_omega(OmegaKey(n, *args.corners), budget))
            print(count)
        else:
            print(format_counts(count_omega(n, budget)), end="")
        return EXIT_OK
    remaining = args.limit
    for key in _iter_keys(n, args.corners):
        if remaining is not None and remaining <= 0:
            break
        per_key = SearchBudget(
            max_nodes=args.max_nodes,
            max_solutions=remaining,
            max_seconds=args.max_seconds,
        )
        for border in enumerate_omega(key, per_key):
            sys.stdout.write(serialize_plan(border.to_plan()))
            if remaining is not None:
                remaining -= 1
    return EXIT_OK


def cmd_orbit(args) -> int:
    doc = parse_document(_read_input(args.input))
    if isinstance(doc, BorderPlan):
        plan = doc
    elif isinstance(doc, GridDocument) and not doc.is_complete():
        plan = plan_from_frame(doc.as_frame())
    else:
        raise DocumentError("orbit expects a border plan or frame, not a full square")
    report = verify_border(plan)
    if not report.valid:
        _print_report(report)
        return EXIT_INVALID
    for symmetry in SYMMETRIES:
        image = apply_symmetry(plan, symmetry)
        if not verify_border(image).valid:
            raise RuntimeError(f"symmetry {symmetry} broke a valid plan")
        sys.stdout.write(serialize_plan(image))
    return EXIT_OK


def _audit_line(audit) -> str:
    line = f"  {audit.row_id} (v={audit.v}, w={audit.w}): {audit.status}"
    if audit.status != "valid":
        details = "; ".join(str(x) for x in audit.raw_report.violations)
        line += f" [{details}]"
    return line


def cmd_tables(args) -> int:
    if not args.check:
        print("seed tables ship verified; run with --check to (re)validate them")
        return EXIT_OK
    ok = True
    audits4 = audit_order4()
    print(f"order-4 seed table: {len(audits4)} entries")
    for audit in audits4:
        print(_audit_line(audit))
    bad4 = [a for a in audits4 if a.status != "valid"]
    if bad4:
        ok = False
    print(f"order-4 summary: {len(audits4) - len(bad4)} valid, {len(bad4)} invalid")
    for m in args.m:
        audits = audit_order_m(m)
        print(f"parameterized table at m={m}: {len(audits)} entries")
        tally: dict[str, int] = {}
        for audit in audits:
            print(_audit_line(audit))
            tally[audit.status] = tally.get(audit.status, 0) + 1
        summary = ", ".join(f"{count} {status}" for status, count in sorted(tally.items()))
        print(f"m={m} summary: {summary} (all entries serve a verified plan)")
    return EXIT_OK if ok else EXIT_INVALID


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="magicborder",
        description="Build, verify, enumerate and transform magic borders "
        "and bordered magic squares.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a bordered square or a single border")
    p_build.add_argument("--order", type=int, required=True,
                         help="square order, or inner order with --border-only")
    p_build.add_argument("--border-only", action="store_true",
                         help="emit one magic border (a frame) instead of a full square")
    p_build.add_argument("--corners", type=_corner_pair, default=None, metavar="V,W",
                         help="prescribe the upper corners (even inner orders)")
    p_build.add_argument("--format", choices=FORMATS, default=GRID)
    p_build.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify", help="verify a square, frame or plan document")
    p_verify.add_argument("input", nargs="?", default=None,
                          help="input file (default stdin)")
    p_verify.add_argument("--bordered", action="store_true",
                          help="also require the concentric (bordered) property")
    p_verify.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="list or count all borders exhaustively")
    p_enum.add_argument("--order", type=int, required=True, help="inner order")
    p_enum.add_argument("--corners", type=_corner_pair, default=None, metavar="V,W")
    p_enum.add_argument("--count-only", action="store_true")
    p_enum.add_argument("--limit", type=int, default=None,
                        help="stop after this many borders")
    p_enum.add_argument("--max-nodes", type=int, default=None,
                        help="abort after this many search nodes (exit 3)")
    p_enum.add_argument("--max-seconds", type=float, default=None,
                        help="abort after this much search time (exit 3)")
    p_enum.set_defaults(func=cmd_enumerate)

    p_orbit = sub.add_parser("orbit", help="emit the eight symmetry images of a plan")
    p_orbit.add_argument("input", nargs="?", default=None,
                         help="plan or frame document (default stdin)")
    p_orbit.set_defaults(func=cmd_orbit)

    p_tables = sub.add_parser("tables", help="validate the shipped seed tables")
    p_tables.add_argument("--check", action="store_true",
                          help="re-validate every entry against the verifier")
    p_tables.add_argument("--m", type=int, action="append", default=[],
                          help="also classify the parameterized table at this order "
                          "(repeatable)")
    p_tables.set_defaults(func=cmd_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return 0 if exc.code is None else int(exc.code)
    except BrokenPipeError:
        return EXIT_OK
    except InfeasibleCornersError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except BudgetExhausted as exc:
        print(f"error: search budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DocumentError, NoBorderError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
