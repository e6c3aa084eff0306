#!/usr/bin/env python3
"""
Command-line front end for the jeu de taquin toolkit.

Usage:
    python io_cli.py shape-validate --shape 6,5,4,2/5,3:shifted
    python io_cli.py tableaux --shape 3,3,2
    python io_cli.py mj --shape 6,5,4,2/5,3:shifted --tabloid R.txt --order P.txt --trace
    python io_cli.py fj --shape 6,5,4,2/5,3:shifted --tabloid R.txt --order P.txt --trace
    python io_cli.py bj --shape 6,5,4,2/5,3:shifted --tabloid Qpi.txt --order Q.txt --trace
    python io_cli.py verify involution --shape 2,2 --exhaustive
    python io_cli.py verify symmetry --shape 3,2,1:shifted --samples 1000 --seed 7
    python io_cli.py verify constancy --shape 3,3,2 --order nps-column
    python io_cli.py amatrix --shape 3,3,2 --format digits --workers 4

Exit codes: 0 success or verified, 1 verification failed, 2 invalid input.
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import analysis
from analysis import CountMatrix, Mode, VerificationReport
from jdt_engine import PairedState, bj, fj, iter_bj, iter_fj, iter_modified_jdt, modified_jdt
from shape_core import Shape, format_shape_spec, make_shape
from tableaux import Filling, Permutation, canonical_order, enumerate_standard
from utils import MAX_DIGIT_VALUES, JdtError, configure_logging


EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INVALID = 2

SHAPE_SPEC = re.compile(r"^\s*(\d+(?:,\d+)*)?(?:/(\d+(?:,\d+)*))?(:shifted)?\s*$")

# Keywords accepted by --order in place of a file
ORDER_KEYWORDS = {
    "nps-column": "nps_column",
    "rowwise-bottomup-rl": "rowwise_bottomup_rl",
}

# Separator line between pairs in fj/bj traces
PAIR_SEPARATOR = "--"


def parse_shape_spec(text: str) -> Shape:
    """
    Parse `OUTER[/INNER][:shifted]`, e.g. `6,5,4,2/5,3:shifted` or `3,3,2`.

    Raises:
        JdtError: ERR_PARSE, or any make_shape rejection
    """
    match = SHAPE_SPEC.match(text)
    if not match or match.group(1) is None:
        raise JdtError("ERR_PARSE", f"bad shape spec {text!r}; expected OUTER[/INNER][:shifted]")
    outer = [int(p) for p in match.group(1).split(",")]
    inner = [int(p) for p in match.group(2).split(",")] if match.group(2) else []
    return make_shape(outer, inner, shifted=match.group(3) is not None)


def parse_filling(text: str, shape: Shape) -> Filling:
    """
    Parse a grid: one line per row of the bounding grid, entries separated by
    spaces, `.` for grid positions outside the shape. Trailing `.` may be omitted.

    Raises:
        JdtError: ERR_PARSE, ERR_NOT_PERMUTATION
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if shape.width == 0:
        if any(lines):
            raise JdtError("ERR_PARSE", "entries given for an empty shape")
        return Filling(shape, ())
    if len(lines) != shape.rows:
        raise JdtError("ERR_PARSE", f"{len(lines)} grid lines for a shape with {shape.rows} rows")

    entries = []
    for i, tokens in enumerate(lines, start=1):
        if len(tokens) > shape.width:
            raise JdtError("ERR_PARSE", f"line {i} has {len(tokens)} positions, grid width is {shape.width}")
        tokens = tokens + ["."] * (shape.width - len(tokens))
        for j, token in enumerate(tokens, start=1):
            member = (i, j) in shape
            if member and token == ".":
                raise JdtError("ERR_PARSE", f"cell {(i, j)} is in the shape but has no entry")
            if not member and token != ".":
                raise JdtError("ERR_PARSE", f"position {(i, j)} is outside the shape but holds {token!r}")
            if member:
                if not (token.isascii() and token.isdigit()):
                    raise JdtError("ERR_PARSE", f"entry {token!r} at {(i, j)} is not a positive integer")
                entries.append(int(token))
    return Filling(shape, tuple(entries))


def render_filling(f: Filling) -> str:
    shape = f.shape
    lines = []
    for i in range(1, shape.rows + 1):
        tokens = [str(f.entry_at((i, j))) if (i, j) in shape else "." for j in range(1, shape.width + 1)]
        lines.append(" ".join(tokens))
    return "\n".join(lines)


def render_pair(state: PairedState) -> str:
    return render_filling(state.first) + "\n\n" + render_filling(state.second)


@dataclass(frozen=True)
class DigitLegend:
    """Distinct matrix values, ascending, mapped to the symbols '1', '2', ..."""

    values: tuple

    @classmethod
    def from_values(cls, values) -> "DigitLegend":
        distinct = tuple(sorted(set(int(v) for v in values)))
        if len(distinct) > MAX_DIGIT_VALUES:
            raise JdtError("ERR_TOO_MANY_VALUES", f"{len(distinct)} distinct values; digits cover {MAX_DIGIT_VALUES}")
        return cls(distinct)

    def symbol(self, value: int) -> str:
        return str(self.values.index(int(value)) + 1)

    def lines(self) -> List[str]:
        return [f"'{self.symbol(v)}' stands for {v}" for v in self.values]


def render_digit_matrix(m: CountMatrix) -> str:
    """One line of digits per row, then a blank line and the legend."""
    legend = DigitLegend.from_values(m.counts.ravel())
    rows = ["".join(legend.symbol(v) for v in row) for row in m.counts]
    return "\n".join(rows) + "\n\n" + "\n".join(legend.lines())


def render_matrix(m: CountMatrix, fmt: str) -> str:
    if fmt == "digits":
        return render_digit_matrix(m)
    if fmt == "csv":
        return m.to_frame().to_csv().rstrip("\n")
    return json.dumps(m.to_dict())


def _render_value(value) -> object:
    if isinstance(value, Filling):
        return render_filling(value)
    if isinstance(value, Permutation):
        return str(value)
    return value


def report_to_dict(report: VerificationReport) -> Dict:
    """JSON-ready report; counterexample fillings are in the grid text format."""
    out = {
        "property": report.property_name,
        "shape": format_shape_spec(report.shape),
        "mode": report.mode.to_dict(),
        "passed": report.passed,
        "checked": report.checked,
        "details": report.details,
    }
    if report.counterexample is not None:
        out["counterexample"] = {k: _render_value(v) for k, v in report.counterexample.items()}
    return out


def render_report(report: VerificationReport) -> str:
    lines = [report.summary()]
    if report.mode.kind == "sampled":
        lines.append(f"seed={report.mode.seed} samples={report.mode.count}")
    for key, value in report.details.items():
        lines.append(f"{key}: {value}")
    if report.counterexample is not None:
        lines.append("counterexample:")
        for key, value in report.counterexample.items():
            rendered = _render_value(value)
            if isinstance(value, Filling):
                lines.append(f"{key} =")
                lines.append(str(rendered))
            else:
                lines.append(f"{key} = {rendered}")
    return "\n".join(lines)


def _read_filling(path: str, shape: Shape) -> Filling:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise JdtError("ERR_PARSE", f"cannot read {path}: {e}") from None
    return parse_filling(text, shape)


def _read_order(value: str, shape: Shape) -> Filling:
    if value in ORDER_KEYWORDS:
        return canonical_order(shape, ORDER_KEYWORDS[value])
    return _read_filling(value, shape)


def _mode_from_args(args) -> Mode:
    if args.samples is None:
        return Mode.exhaustive()
    if args.exhaustive:
        raise JdtError("ERR_PARSE", "--exhaustive and --samples are exclusive")
    if args.seed is None:
        raise JdtError("ERR_PARSE", "--samples needs --seed")
    if args.samples < 1:
        raise JdtError("ERR_PARSE", "--samples must be positive")
    if args.seed < 0:
        raise JdtError("ERR_PARSE", "--seed must be non-negative")
    return Mode.sampled(args.seed, args.samples)


def cmd_shape_validate(args) -> int:
    shape = parse_shape_spec(args.shape)
    print(f"shape: {format_shape_spec(shape)}")
    print(f"n: {shape.n}")
    print("cells: " + " ".join(f"({i},{j})" for i, j in shape.cells))
    return EXIT_OK


def cmd_tableaux(args) -> int:
    shape = parse_shape_spec(args.shape)
    universe = enumerate_standard(shape, force=args.force_large)
    print(f"{len(universe)} standard tableaux of shape {format_shape_spec(shape)}")
    for k, t in enumerate(universe):
        print()
        print(f"# {k}: {' '.join(str(v) for v in t.entries)}")
        print(render_filling(t))
    return EXIT_OK


def cmd_mj(args) -> int:
    shape = parse_shape_spec(args.shape)
    t = _read_filling(args.tabloid, shape)
    s = _read_order(args.order, shape)
    if not args.trace:
        print(render_filling(modified_jdt(t, s)))
        return EXIT_OK
    states = [step.state for step in iter_modified_jdt(t, s) if len(step.transcript)]
    if not states:
        states = [t]
    print("\n\n".join(render_filling(f) for f in states))
    return EXIT_OK


def cmd_paired(args) -> int:
    shape = parse_shape_spec(args.shape)
    first = _read_filling(args.tabloid, shape)
    second = _read_order(args.order, shape)
    run, steps = (fj, iter_fj) if args.command == "fj" else (bj, iter_bj)
    blocks = []
    if args.trace:
        blocks = [render_pair(step.state) for step in steps(first, second) if len(step.transcript)]
    blocks.append(render_pair(run(first, second)))
    print(f"\n{PAIR_SEPARATOR}\n".join(blocks))
    return EXIT_OK


def cmd_verify(args) -> int:
    shape = parse_shape_spec(args.shape)
    if args.order is not None and args.property != "constancy":
        raise JdtError("ERR_PARSE", f"--order applies to constancy only, not {args.property}")
    if args.property == "constancy":
        order = _read_order(args.order or "rowwise-bottomup-rl", shape)
        report = analysis.verify_constancy(shape, order, force=args.force_large)
    elif args.property == "matrix-symmetry":
        report = analysis.verify_matrix_symmetry(shape, workers=args.workers, force=args.force_large)
    else:
        report = analysis.PROPERTIES[args.property](shape, _mode_from_args(args), force=args.force_large)

    if args.format == "json":
        print(json.dumps(report_to_dict(report)))
    else:
        print(render_report(report))
    return EXIT_OK if report.passed else EXIT_FALSIFIED


def cmd_amatrix(args) -> int:
    shape = parse_shape_spec(args.shape)
    matrix = analysis.a_matrix(shape, workers=args.workers, force=args.force_large)
    print(render_matrix(matrix, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="io_cli.py", description="Modified jeu de taquin toolkit")
    parser.add_argument("--verbose", action="store_true", help="debug logging to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_shape(p):
        p.add_argument("--shape", required=True, help="OUTER[/INNER][:shifted], e.g. 6,5,4,2/5,3:shifted")
        p.add_argument("--force-large", action="store_true", help="lift the size caps")
        return p

    p = with_shape(sub.add_parser("shape-validate", help="check a shape spec and list its cells"))
    p.set_defaults(handler=cmd_shape_validate)

    p = with_shape(sub.add_parser("tableaux", help="list standard tableaux in lex reading-word order"))
    p.set_defaults(handler=cmd_tableaux)

    for verb, handler, help_text in [
        ("mj", cmd_mj, "modified jeu de taquin MJ_S(T)"),
        ("fj", cmd_paired, "paired operation FJ(T, S)"),
        ("bj", cmd_paired, "paired operation BJ(S', T')"),
    ]:
        p = with_shape(sub.add_parser(verb, help=help_text))
        p.add_argument("--tabloid", required=True, help="file with the first filling")
        p.add_argument("--order", required=True,
                       help="file with the standard filling, or nps-column / rowwise-bottomup-rl")
        p.add_argument("--trace", action="store_true", help="print every non-trivial intermediate state")
        p.set_defaults(handler=handler)

    p = with_shape(sub.add_parser("verify", help="check a property and report"))
    p.add_argument("property", choices=sorted(list(analysis.PROPERTIES) + ["constancy", "matrix-symmetry"]))
    p.add_argument("--exhaustive", action="store_true", help="sweep every case (default)")
    p.add_argument("--samples", type=int, help="number of seeded random cases")
    p.add_argument("--seed", type=int, help="seed for --samples")
    p.add_argument("--order", help="order for constancy only: file, nps-column or rowwise-bottomup-rl")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_verify)

    p = with_shape(sub.add_parser("amatrix", help="count matrix A_{P,Q}"))
    p.add_argument("--format", choices=["json", "csv", "digits"], default="json")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(handler=cmd_amatrix)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INVALID
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except JdtError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
