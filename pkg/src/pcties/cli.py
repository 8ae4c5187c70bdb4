"""Command-line surface.

Subcommands: analyze, generate, bounds, cover, certify, serve.
Exit codes: 0 ok, 1 I/O error, 2 parse/validation error, 3 failed
self-check. The PCT_THREADS env var caps oracle workers; PCT_PORT sets the
default service port.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import extremal, fileio, indices, oracle
from .core import matrix_to_graph, triad_census
from .errors import PcError, ValidationError

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_SELF_CHECK = 3


def _frac_str(value: Fraction) -> str:
    return str(value)


def _fmt_ratio(value: Fraction) -> str:
    return f"{value} ({float(value):g})"


def cmd_analyze(args) -> int:
    matrix, labels = fileio.load_matrix(args.path)
    report = indices.analyze(matrix, force_ties_denominator=args.with_ties_denominator)
    graph = matrix_to_graph(matrix)
    census = triad_census(graph)
    inconsistent = None
    if args.list_triads or args.json:
        from .core import list_inconsistent_triads

        inconsistent = list_inconsistent_triads(graph)

    def name(v: int) -> str:
        return labels[v] if labels else str(v + 1)

    if args.json:
        doc = {
            "n": report.n,
            "tournament": graph.is_tournament,
            "census": census.as_dict(),
            "inconsistent_count": report.inconsistent_count,
            "max_possible": report.max_possible,
            "denominator": "with-ties" if report.used_ties else "no-ties",
            "zeta": _frac_str(report.zeta_value),
            "zeta_float": float(report.zeta_value),
            "eta": _frac_str(report.eta),
            "eta_float": float(report.eta),
            "inconsistent_triads": [
                {"triad": [name(v) for v in t], "class": cls.value}
                for t, cls in (inconsistent or [])
            ],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
        return EXIT_OK

    kind = "tournament" if graph.is_tournament else "gt-graph with ties"
    print(f"n = {report.n} ({kind})")
    print("census: " + ", ".join(f"{k}={v}" for k, v in census.as_dict().items() if v))
    zeta_name = "zeta_g" if report.used_ties else "zeta"
    print(
        f"inconsistent {report.inconsistent_count}/{report.max_possible}, "
        f"{zeta_name} = {_fmt_ratio(report.zeta_value)}, eta = {_fmt_ratio(report.eta)}"
    )
    if args.list_triads:
        for t, cls in inconsistent:
            print(f"  {{{', '.join(name(v) for v in t)}}}: {cls.value}")
    return EXIT_OK


def cmd_generate(args) -> int:
    n = args.n
    if args.kind == "max-tournament":
        graph = extremal.gen_max_tournament(n)
        expected = indices.max_inconsistent_no_ties(n)
    else:
        graph = extremal.gen_max_dt_graph(n).graph
        expected = indices.max_inconsistent_with_ties(n)
    actual = indices.count_inconsistent(graph)
    if actual != expected:
        print(
            f"self-check failed: generated graph has {actual} inconsistent "
            f"triads, expected {expected}",
            file=sys.stderr,
        )
        return EXIT_SELF_CHECK
    from .core import graph_to_matrix

    if args.format == "matrix":
        text = fileio.matrix_to_csv(graph_to_matrix(graph))
    else:
        text = "\n".join(fileio.graph_to_edge_lines(graph))
        if text:
            text += "\n"
    if args.output:
        with open(args.output, "w") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.csv:
        with open(args.csv, "w", newline="") as fp:
            rows = bounds_mod.write_bounds_csv(args.n, fp)
        print(f"wrote {rows} rows to {args.csv}")
    else:
        bounds_mod.write_bounds_csv(args.n, sys.stdout)
    return EXIT_OK


def cmd_cover(args) -> int:
    edges, size = extremal.min_triad_cover(args.n, mode=args.mode)
    if args.json:
        doc = {
            "n": args.n,
            "mode": args.mode,
            "size": size,
            "edges": [[i + 1, j + 1] for i, j in edges],
            "lower_bound": indices.dt_edge_count(args.n),
        }
        print(json.dumps(doc, sort_keys=True))
        return EXIT_OK
    print(f"size {size}" + (" (proven minimal)" if args.mode == "exact" else " (greedy, feasible)"))
    for i, j in edges:
        print(f"  {{{i + 1}, {j + 1}}}")
    return EXIT_OK


def cmd_certify(args) -> int:
    family = "tournament" if args.family == "t" else "gt-graph"
    report = oracle.enumerate_max(
        args.n, family, allow_big=args.allow_big, workers=args.workers
    )
    if family == "tournament":
        expected, name = indices.max_inconsistent_no_ties(args.n), "I"
    else:
        expected, name = indices.max_inconsistent_with_ties(args.n), "Y"
    ok = report.max_inconsistent_found == expected
    if args.json:
        doc = report.to_json()
        doc["expected"] = expected
        doc["pass"] = ok
        print(json.dumps(doc, sort_keys=True))
    else:
        rel = "==" if ok else "!="
        verdict = "PASS" if ok else "FAIL"
        print(
            f"max {report.max_inconsistent_found} {rel} {name}({args.n}) "
            f"({expected}) {verdict} [visited {report.graphs_visited}]"
        )
    return EXIT_OK if ok else EXIT_SELF_CHECK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(session_log=args.session_log)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcties",
        description="Inconsistency analysis for ordinal pairwise comparisons with ties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a matrix file (JSON or CSV)")
    p.add_argument("path")
    p.add_argument(
        "--with-ties-denominator",
        action="store_true",
        help="rank tournaments against the tie-aware maximum",
    )
    p.add_argument("--list-triads", action="store_true", help="print the inconsistent triads")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="emit a maximally inconsistent graph")
    p.add_argument("kind", choices=["max-tournament", "max-dt"])
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["matrix", "edges"], default="matrix")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bounds", help="emit the bounding-function table as CSV")
    p.add_argument("n", type=int)
    p.add_argument("--csv", help="output path (default: stdout)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cover", help="solve the triad-cover problem")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=["greedy", "exact"], default="exact")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("certify", help="exhaustively certify the closed-form maximum")
    p.add_argument("n", type=int)
    p.add_argument("--family", choices=["t", "gt"], default="gt")
    p.add_argument("--allow-big", action="store_true", help="enable the flagged larger sizes")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("serve", help="run the elicitation HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=int(os.environ.get("PCT_PORT", "8000")))
    p.add_argument("--session-log", help="append-only JSONL session event log")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except PcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
