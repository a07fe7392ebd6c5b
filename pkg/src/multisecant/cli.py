"""Command-line interface.

Subcommands:

    chern      total Chern class of a bundle expression
    secants    degree of the (j+1)-secant locus, with caveat flags
    trisecant  closed form and double sum of the trisecant count
    normality  normality-criterion verdict (text or JSON)
    segre      a single Segre coefficient
    verify     run a named verification suite
    census     enumerate complete intersections into CSV or JSON

Exit codes: 0 success, 1 usage or parse error, 2 computation hypothesis
error, 3 verification-suite failure.  All semantics are controlled by
flags; the only environment variable read is MULTISECANT_LOG (log level).
Identical argv (and seed) produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .bundles import BundleSpec, ChernVector, as_chern_vector, segre_coefficient
from .classpoly import TruncatedClassPoly
from .census import enumerate_rows, render_csv, render_json
from .errors import MultisecantError, ParseError
from .exprs import elaborate, parse_bundle
from .normality import (
    Verdict,
    check_2normal,
    check_jnormal_bundle,
    check_linear_normality_zak,
)
from .rationals import format_rational
from .secants import multisecant_report, trisecant_closed, trisecant_double_sum
from .verify import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_SUITE_FAILURE = 3

log = logging.getLogger("multisecant")


class _CliExit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code
        self.message = message


class _CliParser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _CliExit(EXIT_USAGE, f"{self.prog}: error: {message}")


def _parse_range(text: str) -> tuple[int, int]:
    if ".." not in text:
        raise ValueError(f"expected 'lo..hi', got {text!r}")
    lo, hi = text.split("..", 1)
    return int(lo), int(hi)


def _elaborated(args) -> BundleSpec | ChernVector:
    return elaborate(parse_bundle(args.expr), args.n)


def _to_chern_vector(value: BundleSpec | ChernVector) -> ChernVector:
    return value if isinstance(value, ChernVector) else as_chern_vector(value)


def _verdict_lines(verdict: Verdict) -> list[str]:
    lines = [f"verdict: {verdict.outcome}", f"criterion: {verdict.citation}"]
    for hyp in verdict.hypotheses:
        left, right = hyp.render_sides()
        mark = "ok" if hyp.satisfied else "unmet"
        lines.append(f"  [{mark}] {hyp.name}: {hyp.condition} ({left} vs {right})")
    for note in verdict.notes:
        lines.append(f"  note: {note}")
    return lines


def verdict_to_record(verdict: Verdict) -> dict:
    record = {
        "outcome": verdict.outcome,
        "citation": verdict.citation,
        "hypotheses": [
            {
                "name": h.name,
                "condition": h.condition,
                "left": h.render_sides()[0],
                "right": h.render_sides()[1],
                "satisfied": h.satisfied,
            }
            for h in verdict.hypotheses
        ],
    }
    if verdict.notes:
        record["notes"] = list(verdict.notes)
    return record


# -- subcommand implementations -------------------------------------------


def _cmd_chern(args, out) -> int:
    value = _elaborated(args)
    if isinstance(value, ChernVector):
        poly = TruncatedClassPoly.from_coeffs(value.ambient_dim, value.c)
        out.write(f"ambient: P^{value.ambient_dim}\n")
        out.write(f"codim: {value.codim}\n")
        out.write(f"degree: {value.degree}\n")
        out.write(f"chern vector: {';'.join(str(c) for c in value.c)}\n")
        out.write(f"total chern: {poly}\n")
    else:
        out.write(f"ambient: P^{value.ambient_dim}\n")
        out.write(f"rank: {value.rank}\n")
        out.write(f"total chern: {value.total_chern}\n")
    return EXIT_OK


def _cmd_secants(args, out) -> int:
    value = _elaborated(args)
    report = multisecant_report(value, args.j)
    factors = ", ".join(format_rational(f) for f in report.factors)
    out.write(f"secant lines: {args.j + 1}-secants through a generic external point\n")
    out.write(f"twisted top chern factors c_r(E(0))..c_r(E(-{args.j})): {factors}\n")
    out.write(f"degree: {format_rational(report.value)}\n")
    flags = []
    if report.possibly_degenerate:
        flags.append("zero class: locus may have smaller dimension than expected")
    if not report.integral:
        flags.append("non-integral value: improper-dimension input")
    out.write(f"flags: {'; '.join(flags) if flags else 'none'}\n")
    return EXIT_OK


def _cmd_trisecant(args, out) -> int:
    cv = _to_chern_vector(_elaborated(args))
    closed = trisecant_closed(cv)
    double = trisecant_double_sum(cv)
    out.write(f"closed form (1/2)c_r(N(-1))c_r(N(-2)): {format_rational(closed)}\n")
    out.write(f"expanded double sum:                   {format_rational(double)}\n")
    if closed != double:
        out.write("equal: no\n")
        raise _CliExit(EXIT_HYPOTHESIS, "trisecant forms disagree")
    out.write("equal: yes\n")
    return EXIT_OK


def _cmd_normality(args, out) -> int:
    value = _elaborated(args)
    if isinstance(value, BundleSpec):
        verdict = check_jnormal_bundle(value, args.j)
    elif args.j == 2:
        m = value.ambient_dim - value.codim
        verdict = check_2normal(m, value.codim, value)
    elif args.j == 1:
        verdict = check_linear_normality_zak(value.ambient_dim, value.codim)
    else:
        raise _CliExit(
            EXIT_USAGE,
            "abstract normal data supports only --j 1 (linear) or --j 2 (quadratic)",
        )
    if args.format == "json":
        out.write(json.dumps(verdict_to_record(verdict), indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(_verdict_lines(verdict)) + "\n")
    return EXIT_OK


def _cmd_segre(args, out) -> int:
    cv = _to_chern_vector(_elaborated(args))
    out.write(f"sigma_{args.k} = {segre_coefficient(cv, args.k)}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    try:
        report = run_suite(args.suite, args.trials, args.seed)
    except ValueError as exc:
        raise _CliExit(EXIT_USAGE, str(exc))
    out.write("\n".join(report.lines) + "\n")
    return EXIT_OK if report.passed else EXIT_SUITE_FAILURE


def _cmd_census(args, out) -> int:
    rows = enumerate_rows(args.r, args.degrees, args.n, args.j)
    text = render_csv(rows) if args.format == "csv" else render_json(rows)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    log.info("census: %d rows", len(rows))
    out.write(f"wrote {len(rows)} rows to {args.out}\n")
    return EXIT_OK


# -- argument wiring -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(
        prog="multisecant",
        description="Exact secant degrees, Chern/Segre calculus and "
        "normality criteria on projective space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_expr_command(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, required=True, help="ambient dimension")
        p.add_argument("expr", help="bundle expression, e.g. 'O(2)+O(2)' or 'N{r=2,c=[1,4,4]}'")
        return p

    add_expr_command("chern", "print the total Chern class")

    p = add_expr_command("secants", "degree of the (j+1)-secant locus")
    p.add_argument("--j", type=int, required=True, help="count (j+1)-secant lines")

    add_expr_command("trisecant", "trisecant count, closed form and double sum")

    p = add_expr_command("normality", "normality-criterion verdict")
    p.add_argument("--j", type=int, required=True, help="normality degree j")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add_expr_command("segre", "a single Segre coefficient")
    p.add_argument("--k", type=int, required=True, help="Segre index k")

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("census", help="enumerate complete intersections to a file")
    p.add_argument("--r", type=int, required=True, help="codimension")
    p.add_argument("--degrees", type=_parse_range, required=True, metavar="LO..HI")
    p.add_argument("--n", type=_parse_range, required=True, metavar="LO..HI")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    return parser


_COMMANDS = {
    "chern": _cmd_chern,
    "secants": _cmd_secants,
    "trisecant": _cmd_trisecant,
    "normality": _cmd_normality,
    "segre": _cmd_segre,
    "verify": _cmd_verify,
    "census": _cmd_census,
}


def run_command(argv, out=None) -> int:
    """Run one CLI invocation; returns the exit code."""
    out = out if out is not None else sys.stdout
    level = os.environ.get("MULTISECANT_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _CliExit as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MultisecantError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
