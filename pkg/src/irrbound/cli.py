"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 graph validation error, 4 bad
parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

from . import generators
from .bounds import bound_report
from .edgelist import format_edge_list, parse_edge_list
from .errors import GraphValidationError, IrrboundError, ParameterError, ParseError
from .graph import Graph, degree_profile, irregularity
from .spectral import DEFAULT_REL_TOL
from .study import (
    CSV_COLUMNS,
    family_asymptotics,
    find_t15_candidates,
    rows_to_csv,
    tree_bound_study,
)
from .trees import MAX_TREE_SIZE

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_PARAM = 0, 2, 3, 4

FAMILY_ARITY = {
    "path": 1, "cycle": 1, "star": 1, "complete": 1, "bipartite": 2, "yoke": 2, "random": 3,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAM, f"{self.prog}: error: {message}\n")


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.6f}"
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v)) or "-"
    return str(v)


def _kv_table(d: dict) -> str:
    width = max(map(len, d))
    return "".join(f"{k:<{width}}  {_fmt(v)}\n" for k, v in d.items())


def _kv_csv(d: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(d)
    w.writerow(["" if v is None else ";".join(map(str, v)) if isinstance(v, (list, tuple))
                else repr(v) if isinstance(v, float) else v for v in d.values()])
    return buf.getvalue()


def _rows_table(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    cells = [cols] + [[_fmt(r[c]) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
    return "".join("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() + "\n"
                   for row in cells)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read_graph(path: str) -> Graph:
    try:
        if path == "-":
            return parse_edge_list(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return parse_edge_list(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text") from exc


def cmd_info(args) -> str:
    g = _read_graph(args.input)
    prof = degree_profile(g)
    info = {
        "n": g.n,
        "m": g.m,
        "zagreb": prof.zagreb,
        "pendants": prof.pendants,
        "max_degree": prof.max_degree,
        "irregularity": irregularity(g),
    }
    return {"json": _dump_json, "csv": _kv_csv}.get(args.format, _kv_table)(info)


def cmd_bounds(args) -> str:
    g = _read_graph(args.input)
    report = bound_report(g, args.tol, use_merris_cap=args.merris_cap).to_dict()
    return {"json": _dump_json, "csv": _kv_csv}.get(args.format, _kv_table)(report)


def _number(text: str, kind):
    try:
        return kind(text)
    except ValueError:
        raise ParameterError(f"expected {kind.__name__}, got {text!r}") from None


def build_family(family: str, params: list[str]) -> Graph:
    arity = FAMILY_ARITY.get(family)
    if arity is None:
        raise ParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILY_ARITY)}")
    if len(params) != arity:
        raise ParameterError(f"{family} takes {arity} parameter(s), got {len(params)}")
    if family == "random":
        return generators.random_graph(
            _number(params[0], int), _number(params[1], float), _number(params[2], int)
        )
    ints = [_number(p, int) for p in params]
    builder = {
        "path": generators.path,
        "cycle": generators.cycle,
        "star": generators.star,
        "complete": generators.complete,
        "bipartite": generators.complete_bipartite,
        "yoke": generators.yoke,
    }[family]
    return builder(*ints)


def cmd_gen(args) -> str:
    g = build_family(args.family, args.params)
    if args.format == "json":
        return _dump_json({"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]})
    if args.format == "csv":
        return "u,v\n" + "".join(f"{u},{v}\n" for u, v in g.edges)
    return format_edge_list(g, comment=f"{args.family} {' '.join(args.params)}")


def _check_tree_size(n: int) -> None:
    if not 1 <= n <= MAX_TREE_SIZE:
        raise ParameterError(f"tree size must be in 1..{MAX_TREE_SIZE}, got {n}")


def _row_dicts(rows) -> list[dict]:
    return [{c: getattr(r, c) for c in CSV_COLUMNS} for r in rows]


def cmd_study(args) -> str:
    _check_tree_size(args.n)
    outcome = tree_bound_study(args.n, args.tol)
    if args.format == "csv":
        print(outcome.summary_line(), file=sys.stderr)
        return outcome.to_csv()
    if args.format == "json":
        return _dump_json(outcome.summary())
    return _rows_table(_row_dicts(outcome.rows)) + outcome.summary_line() + "\n"


def cmd_t15(args) -> str:
    _check_tree_size(args.n)
    found = find_t15_candidates(args.n, args.tol)
    if args.format == "csv":
        return rows_to_csv(found)
    if args.format == "json":
        return _dump_json({"n": args.n, "candidates": _row_dicts(found)})
    body = _rows_table(_row_dicts(found)) if found else "no matching trees\n"
    return body + f"candidates={len(found)}\n"


def cmd_asymptotics(args) -> str:
    rows = [asdict(r) for r in family_asymptotics(
        args.family, args.n_values, closed_form_only=args.closed_form, rel_tol=args.tol)]
    if args.format == "json":
        return _dump_json(rows)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    return _rows_table(rows)


def _tolerance(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid tolerance {text!r}") from None


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument("--tol", type=_tolerance, default=DEFAULT_REL_TOL,
                     help="relative tolerance for the Laplacian spectral radius")

    parser = _Parser(prog="irrbound", description="Graph irregularity and its upper bounds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", parents=[common], help="degree invariants of a graph")
    p.add_argument("input", help="edge-list file, or - for stdin")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("bounds", parents=[common, tol], help="irregularity and all bounds")
    p.add_argument("input", help="edge-list file, or - for stdin")
    p.add_argument("--merris-cap", action="store_true",
                   help="use min(n, max_v d(v)+m(v)) in place of the computed spectral radius")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gen", parents=[common], help="emit a graph family as an edge list")
    p.add_argument("family", help=", ".join(FAMILY_ARITY))
    p.add_argument("params", nargs="*",
                   help="sizes; random takes N P SEED, bipartite A B, yoke N1 N2")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("study", parents=[common, tol], help="compare bounds on all free trees")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_study)

    p = sub.add_parser("t15", parents=[common, tol], help="search for the worked tree example")
    p.add_argument("--n", type=int, default=10, help="tree size to scan (default 10)")
    p.set_defaults(func=cmd_t15)

    p = sub.add_parser("asymptotics", parents=[common, tol],
                       help="bounds along the balanced yoke or path family")
    p.add_argument("family", choices=("yoke-balanced", "path"))
    p.add_argument("n_values", type=int, nargs="+")
    p.add_argument("--closed-form", action="store_true", help="skip graph construction")
    p.set_defaults(func=cmd_asymptotics)
    return parser


def main(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        text = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphValidationError as exc:
        print(f"invalid graph: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ParameterError, IrrboundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
