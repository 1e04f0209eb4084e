"""Command-line front end: compute | construct | verify | audit | lemmas.

All tables are emitted deterministically (fixed 10-decimal formatting,
fixed row order) as CSV or Markdown, so identical invocations produce
byte-identical output regardless of worker count.

Exit codes: 0 all checks passed or informational output, 1 a
verification or lemma check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .extremal import (
    AUDIT_CASES,
    complete_split,
    double_star,
    formula_audit,
    kite,
    star,
    turan,
)
from .graphs import Graph, Graph6Error, GraphError, decode_graph6, encode_graph6
from .index import abs_index, edge_contributions
from .invariants import GraphInvariants
from .search import (
    DEFAULT_MAX_ORDER,
    HARD_MAX_ORDER,
    THEOREM_IDS,
    check_edge_additions,
    check_scalar_properties,
    verify_theorem,
)

WORKERS_ENV = "ABSINDEX_WORKERS"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _fmt(x: float) -> str:
    return f"{x:.10f}"


def _write_table(header: list[str], rows: list[list[str]], fmt: str, out) -> None:
    if fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(row) + "\n")
    else:
        out.write("| " + " | ".join(header) + " |\n")
        out.write("|" + "|".join(" --- " for _ in header) + "|\n")
        for row in rows:
            out.write("| " + " | ".join(row) + " |\n")


def _parse_range(text: str, what: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad {what} range {text!r}; use N or A..B")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty {what} range {text!r}")
    return lo, hi


def _order_cap(args) -> int:
    return HARD_MAX_ORDER if args.enable_n8 else DEFAULT_MAX_ORDER


def _resolve_workers(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _summary_rows(g: Graph) -> tuple[list[str], list[str]]:
    inv = GraphInvariants.of(g)
    header = [
        "order",
        "edges",
        "connected",
        "chromatic",
        "independence",
        "pendants",
        "abs_index",
    ]
    row = [
        str(g.order),
        str(g.edge_count),
        str(inv.connected).lower(),
        str(inv.chromatic),
        str(inv.independence),
        str(inv.pendants),
        _fmt(abs_index(g)),
    ]
    return header, row


def _emit_graph_report(g: Graph, fmt: str, out) -> None:
    header, row = _summary_rows(g)
    _write_table(header, [row], fmt, out)
    out.write("\n")
    contrib_rows = [
        [str(c.edge[0]), str(c.edge[1]), str(c.du), str(c.dv), _fmt(c.value)]
        for c in edge_contributions(g)
    ]
    _write_table(["u", "v", "deg_u", "deg_v", "value"], contrib_rows, fmt, out)


# -- subcommands ------------------------------------------------------


def _cmd_compute(args, out) -> int:
    text = args.graph6
    if text is None:
        text = sys.stdin.read().strip()
    if not text:
        print("compute: empty graph6 input", file=sys.stderr)
        return EXIT_USAGE
    try:
        g = decode_graph6(text)
    except Graph6Error as exc:
        print(f"compute: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(f"graph6,{encode_graph6(g)}\n\n")
    _emit_graph_report(g, args.format, out)
    return EXIT_OK


def _cmd_construct(args, out) -> int:
    try:
        if args.family == "turan":
            _need(args, "chi")
            g = turan(args.n, args.chi)
            audit = ("T1", args.n, args.chi)
        elif args.family == "split":
            _need(args, "alpha")
            g = complete_split(args.n, args.alpha)
            audit = ("T2", args.n, args.alpha)
        elif args.family == "star":
            g = star(args.n)
            audit = ("T3", args.n, args.n - 1)
        elif args.family == "dstar":
            g = double_star(args.n, args.m)
            audit = ("T3", args.n, args.n - 2) if args.m == 2 else None
        else:  # kite
            _need(args, "p")
            g = kite(args.n, args.p)
            audit = ("T3", args.n, args.p) if 1 <= args.p <= args.n - 3 else None
    except (GraphError, ValueError) as exc:
        print(f"construct: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(f"graph6,{encode_graph6(g)}\n\n")
    _emit_graph_report(g, args.format, out)
    if args.audit and audit is not None:
        a = formula_audit(*audit)
        out.write("\n")
        _write_table(
            ["case", "printed", "direct", "difference", "agrees"],
            [[
                a.case_label,
                _fmt(a.printed_value),
                _fmt(a.direct_value),
                _fmt(a.abs_difference),
                str(a.agrees).lower(),
            ]],
            args.format,
            out,
        )
    return EXIT_OK


def _need(args, name: str) -> None:
    if getattr(args, name) is None:
        raise ValueError(f"family {args.family!r} needs --{name}")


def _theorem_params(theorem: str, n: int) -> list[int]:
    if theorem == "T1":
        return list(range(3, n))
    return list(range(1, n))


def _cmd_verify(args, out) -> int:
    n_lo, n_hi = args.n
    cap = _order_cap(args)
    if n_hi > cap:
        print(
            f"verify: order cap {cap} exceeded"
            + ("" if args.enable_n8 else " (use --enable-n8 for n = 8)"),
            file=sys.stderr,
        )
        return EXIT_USAGE
    workers = _resolve_workers(args)
    theorems = args.theorems
    header = [
        "theorem",
        "n",
        "param",
        "class_count",
        "max_abs",
        "maximizer_graph6",
        "construction_match",
        "unique",
        "in_hypothesis",
    ]
    rows = []
    all_ok = True
    for theorem in theorems:
        for n in range(n_lo, n_hi + 1):
            for k in _theorem_params(theorem, n):
                rep = verify_theorem(
                    theorem, n, k, workers=workers, allow_order_8=args.enable_n8
                )
                if rep.in_hypothesis and not (rep.construction_match and rep.unique):
                    all_ok = False
                rows.append([
                    theorem,
                    str(n),
                    str(k),
                    str(rep.graph_count),
                    _fmt(rep.max_value) if rep.max_value is not None else "",
                    ";".join(rep.maximizer_graph6),
                    str(bool(rep.construction_match)).lower(),
                    str(rep.unique).lower(),
                    str(bool(rep.in_hypothesis)).lower(),
                ])
    _write_table(header, rows, args.format, out)
    return EXIT_OK if all_ok else EXIT_FAILED


def _audit_params(case: str, n: int) -> list[int]:
    if case == "T1":
        return list(range(3, n))
    if case == "T3-clique-term":
        return list(range(1, n - 2))
    return list(range(1, n))


def _cmd_audit(args, out) -> int:
    n_lo, n_hi = args.n
    header = ["case", "n", "param", "printed", "direct", "difference", "agrees"]
    rows = []
    for n in range(n_lo, n_hi + 1):
        for k in _audit_params(args.case, n):
            a = formula_audit(args.case, n, k)
            rows.append([
                args.case,
                str(n),
                str(k),
                _fmt(a.printed_value),
                _fmt(a.direct_value),
                _fmt(a.abs_difference),
                str(a.agrees).lower(),
            ])
    _write_table(header, rows, args.format, out)
    return EXIT_OK


def _cmd_lemmas(args, out) -> int:
    n_lo, n_hi = args.n
    workers = _resolve_workers(args)
    ok = True
    rows = []
    for n in range(n_lo, n_hi + 1):
        rep = check_edge_additions(n, workers=workers)
        ok &= rep.passed
        rows.append([
            f"edge addition increases ABS (n={n})",
            str(rep.passed).lower(),
            str(rep.checks),
            _fmt(rep.min_margin) if rep.min_margin is not None else "",
        ])
    for prop in check_scalar_properties():
        ok &= prop.passed
        rows.append([
            prop.name,
            str(prop.passed).lower(),
            str(prop.checks),
            _fmt(prop.min_margin),
        ])
    _write_table(["check", "passed", "checks", "min_margin"], rows, args.format, out)
    return EXIT_OK if ok else EXIT_FAILED


# -- argument parsing -------------------------------------------------


def _theorem_list(text: str) -> list[str]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    for t in items:
        if t not in THEOREM_IDS:
            raise argparse.ArgumentTypeError(
                f"unknown theorem {t!r}; choose from {','.join(THEOREM_IDS)}"
            )
    if not items:
        raise argparse.ArgumentTypeError("empty theorem list")
    return items


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="absindex",
        description="Atom-bond sum-connectivity index: compute, construct "
        "extremal families, audit printed bounds, verify by exhaustive search.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--format", choices=("csv", "markdown"), default="csv",
            help="table output format (default csv)",
        )
        p.add_argument("--out", default=None, help="write output to this file")
        p.add_argument(
            "--workers", type=int, default=None,
            help=f"worker processes (default 1; env {WORKERS_ENV} overrides)",
        )
        p.add_argument(
            "--enable-n8", action="store_true",
            help="allow order-8 sweeps (slow)",
        )

    p = sub.add_parser("compute", help="ABS report for a graph6 graph")
    p.add_argument("graph6", nargs="?", help="graph6 text (default: stdin)")
    common(p)

    p = sub.add_parser("construct", help="build an extremal-family graph")
    p.add_argument("family", choices=("turan", "split", "star", "dstar", "kite"))
    p.add_argument("--n", type=int, required=True, help="order")
    p.add_argument("--chi", type=int, default=None, help="part count (turan)")
    p.add_argument("--alpha", type=int, default=None, help="independent-set size (split)")
    p.add_argument("--p", type=int, default=None, help="pendant count (kite)")
    p.add_argument("--m", type=int, default=2, help="internal degree (dstar, default 2)")
    p.add_argument(
        "--audit", action="store_true", help="append the printed-vs-direct audit row"
    )
    common(p)

    p = sub.add_parser("verify", help="exhaustive extremal verification sweep")
    p.add_argument(
        "--theorems", type=_theorem_list, default=list(THEOREM_IDS),
        help="comma-separated subset of T1,T2,T3 (default all)",
    )
    p.add_argument(
        "--n", type=lambda s: _parse_range(s, "order"), default=(5, 7),
        help="order range, N or A..B (default 5..7)",
    )
    common(p)

    p = sub.add_parser("audit", help="printed bound vs direct evaluation table")
    p.add_argument("case", choices=AUDIT_CASES)
    p.add_argument(
        "--n", type=lambda s: _parse_range(s, "order"), default=(5, 7),
        help="order range, N or A..B (default 5..7)",
    )
    common(p)

    p = sub.add_parser("lemmas", help="edge-addition and scalar-grid checks")
    p.add_argument(
        "--n", type=lambda s: _parse_range(s, "order"), default=(4, 6),
        help="order range for the edge-addition sweep (default 4..6, cap 6)",
    )
    common(p)

    return parser


_DISPATCH = {
    "compute": _cmd_compute,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "audit": _cmd_audit,
    "lemmas": _cmd_lemmas,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = _DISPATCH[args.command]
    try:
        if args.out:
            with open(args.out, "w", newline="") as out:
                return handler(args, out)
        return handler(args, sys.stdout)
    except ValueError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_entry() -> None:  # pragma: no cover - thin wrapper
    sys.exit(main())
