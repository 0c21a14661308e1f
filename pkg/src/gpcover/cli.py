"""Command line front end.

Exit status: 0 success, 1 usage error, 2 negative verdict (cover not
exact, no coefficient below one), 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import bounds
from .constructions import STRATEGIES, ConstructionStrategy, construct, lemma1_cover
from .errors import NotFound
from .hypergraph import loads_cover
from .search import SearchBudget, exact_min_cover
from .verifier import verify_exact_cover

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _dec(x) -> str:
    return bounds.decimal_str(x)


def _table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    cols = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    lines = ["  ".join(c.rjust(widths[c]) for c in cols)]
    lines += ["  ".join(str(r[c]).rjust(widths[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _product_pairs(text: str | None):
    if text is None:
        return None
    return frozenset(int(t) for t in text.split(",") if t.strip())


def cmd_construct(args) -> int:
    if args.strategy == "lemma1":
        if args.a is None or args.b is None:
            raise SystemExit(_usage("lemma1 needs --a and --b"))
        split = args.split if args.split is not None else (args.n + 1) // 2
        cover = lemma1_cover(range(split), range(split, args.n), args.a, args.b)
    else:
        if args.r is None:
            raise SystemExit(_usage("--r is required"))
        strategy = ConstructionStrategy(args.strategy, args.threshold, _product_pairs(args.product_pairs))
        cover = construct(args.n, args.r, strategy)
    _emit(cover.dumps() + "\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    report = verify_exact_cover(loads_cover(text))
    _emit(report.dumps() + "\n", args.output)
    return EXIT_OK if report.is_exact else EXIT_FAILED


def cmd_coeffs(args) -> int:
    table = bounds.coefficient_table(args.max)
    rows = []
    for r, c in table.items():
        products = [p.t for p in c.pair_choices if p.option == "product"]
        rows.append(
            {
                "r": r,
                "kind": c.kind,
                "c_r": _fraction_str(c.value),
                "c_r_decimal": _dec(c.value),
                "product_pairs": " ".join(map(str, products)),
            }
        )
    _emit(_table(rows, args.format), args.output)
    return EXIT_OK


def cmd_bounds(args) -> int:
    table = bounds.coefficient_table(max(args.r_max, 4))
    rows = []
    for r in range(max(args.r_min, 2), args.r_max + 1):
        c = table[r].value
        lower = bounds.lower_bound_coefficient(r)
        rows.append(
            {
                "r": r,
                "lower_bound": _fraction_str(lower),
                "lower_bound_decimal": _dec(lower),
                "c_r": _fraction_str(c),
                "c_r_decimal": _dec(c),
                "prior": _dec(bounds.prior_coefficient(r)) if r >= 4 else "",
                "closed_form": _dec(bounds.closed_form_coefficient(r)),
            }
        )
    _emit(_table(rows, args.format), args.output)
    return EXIT_OK


def cmd_threshold(args) -> int:
    try:
        r_star, table = bounds.smallest_odd_below_one(args.max)
    except NotFound as exc:
        _emit(json.dumps({"r_star": None, "max": args.max, "message": str(exc)}) + "\n", args.output)
        return EXIT_FAILED
    c = dict(table)[r_star]
    out = {"r_star": r_star, "max": args.max, "c_r": _fraction_str(c), "c_r_decimal": _dec(c)}
    if args.format == "json":
        _emit(json.dumps(out) + "\n", args.output)
    else:
        _emit(f"smallest odd r with c_r < 1: {r_star} (c_r = {out['c_r_decimal']})\n", args.output)
    return EXIT_OK


def cmd_crossover(args) -> int:
    r = bounds.crossover_even(args.limit)
    if args.format == "json":
        _emit(json.dumps({"crossover": r, "limit": args.limit}) + "\n", args.output)
    else:
        _emit(f"{r}\n", args.output)
    return EXIT_OK


def cmd_trace(args) -> int:
    rows = [
        {"n": n, "bound": b, "ratio": _fraction_str(x), "ratio_decimal": _dec(x)}
        for n, b, x in bounds.finite_bound_trace(args.r, args.k_max)
    ]
    _emit(_table(rows, args.format), args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    res = exact_min_cover(args.n, args.r, SearchBudget(args.max_nodes, args.time_limit))
    _emit(res.dumps() + "\n", args.output)
    return EXIT_OK if res.exhausted else EXIT_BUDGET


def _usage(msg: str) -> int:
    sys.stderr.write(f"gpcover: error: {msg}\n")
    return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gpcover", description="Exact covers of complete hypergraphs by complete r-partite blocks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("json", "csv", "text"), default="json"):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--output", "-o", default=None, help="write to this path instead of stdout")

    sp = sub.add_parser("construct", help="build a cover and print it as JSON")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int)
    sp.add_argument("--strategy", choices=STRATEGIES + ("lemma1",), default="baseline")
    sp.add_argument("--threshold", type=int, default=None, help="recursion falls back to baseline at or below this n")
    sp.add_argument("--product-pairs", default=None, help="comma separated pair indices; empty string for none")
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--split", type=int, help="|S| for lemma1; defaults to ceil(n/2)")
    common(sp, ("json",))
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check that a cover JSON is an exact cover")
    sp.add_argument("input", nargs="?", default="-")
    common(sp, ("json",))
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("coeffs", help="table of exact coefficients c_r")
    sp.add_argument("--max", type=int, default=130)
    common(sp, default="csv")
    sp.set_defaults(func=cmd_coeffs)

    sp = sub.add_parser("bounds", help="lower bound, c_r, prior and closed-form coefficients")
    sp.add_argument("--r-min", type=int, default=2)
    sp.add_argument("--r-max", type=int, default=40)
    common(sp, default="csv")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("threshold", help="smallest odd r with c_r < 1")
    sp.add_argument("--max", type=int, default=301)
    common(sp, ("json", "text"))
    sp.set_defaults(func=cmd_threshold)

    sp = sub.add_parser("crossover", help="largest even r where (14/15)^(r/6) beats (r/2)(14/15)^(r/4)")
    sp.add_argument("--limit", type=int, default=2000)
    common(sp, ("json", "text"))
    sp.set_defaults(func=cmd_crossover)

    sp = sub.add_parser("trace", help="finite block-count bounds at n = 2^k")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--k-max", type=int, default=12)
    common(sp, default="csv")
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("search", help="exact f_r(n) by exhaustive search")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--max-nodes", type=int, default=50_000_000)
    sp.add_argument("--time-limit", type=float, default=600.0)
    common(sp, ("json",))
    sp.set_defaults(func=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    # exact coefficients for r near 300 have numerators of ~6000 digits
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        return args.func(args)
    except ValueError as exc:  # includes every GPCoverError
        return _usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())
