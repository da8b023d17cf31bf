"""Command-line surface.

Subcommands::

    thompson [--base N] eval FILE X          print the exact image of X
    thompson [--base N] word "TOKENS"        evaluate a word, emit a document
    thompson [--base N] plot FILE --out P    render the graph (svg/png/pdf)
    thompson [--base N] check SUITE [opts]   run a verification suite

Exit codes are a stable contract: 0 pass, 1 check or runtime failure,
2 usage or parse error, 3 validation or constraint error, 4 domain error.
All output is deterministic for fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .documents import dump_element, evaluate_word_text, load_element
from .errors import ConstraintError, DomainError, ParseError, ValidationError
from .nadic import format_rational, parse_rational
from .plotting import render_elements
from .suites import SUITES, Report, run_suite

__all__ = ["main"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompson",
        description="Exact computations in the piecewise-linear groups F(N).",
    )
    parser.add_argument(
        "--base",
        type=int,
        default=None,
        help="group parameter N (default: 2, or the base recorded in the input file)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an element document at a point")
    p_eval.add_argument("file", help="element document (JSON)")
    p_eval.add_argument("x", help="rational point in [0,1], e.g. 3/8")
    p_eval.set_defaults(func=cmd_eval)

    p_word = sub.add_parser("word", help="evaluate a word to an element document")
    p_word.add_argument("word", help='tokens, e.g. "x0^-1 A(1/2,1) s"')
    p_word.add_argument("--out", help="write the document here instead of stdout")
    p_word.set_defaults(func=cmd_word)

    p_plot = sub.add_parser("plot", help="render an element's graph to a file")
    p_plot.add_argument("file", help="element document (JSON)")
    p_plot.add_argument("--out", required=True, help="output path (.svg/.png/.pdf)")
    p_plot.add_argument("--title", default=None)
    p_plot.set_defaults(func=cmd_plot)

    p_check = sub.add_parser("check", help="run a verification suite")
    p_check.add_argument("suite", choices=sorted(SUITES))
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--samples", type=int, default=None)
    p_check.add_argument("--count", type=int, default=None, help="witnesses per element (icc)")
    p_check.add_argument("--maxj", type=int, default=None, help="largest generator index (relations)")
    p_check.add_argument(
        "--out", default=None, help="directory for report.json, cases.tsv and figure.svg"
    )
    p_check.set_defaults(func=cmd_check)

    return parser


def cmd_eval(args: argparse.Namespace) -> int:
    element = load_element(Path(args.file).read_text())
    _check_base_flag(args, element.base)
    x = parse_rational(args.x)
    print(format_rational(element(x)))
    return 0


def cmd_word(args: argparse.Namespace) -> int:
    base = args.base if args.base is not None else 2
    element = evaluate_word_text(args.word, base)
    text = dump_element(element)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_plot(args: argparse.Namespace) -> int:
    element = load_element(Path(args.file).read_text())
    _check_base_flag(args, element.base)
    render_elements([("", element)], args.out, title=args.title)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    base = args.base if args.base is not None else 2
    report = run_suite(
        args.suite,
        base=base,
        seed=args.seed,
        samples=args.samples,
        count=args.count,
        maxj=args.maxj,
    )
    print(f"suite={report.suite} base={report.base} seed={report.seed} "
          + " ".join(f"{k}={v}" for k, v in sorted(report.params.items())))
    for line in report.summary_lines():
        print(line)
    print(f"verdict: {'pass' if report.passed else 'fail'}")
    if args.out:
        _write_report(report, Path(args.out))
    return 0 if report.passed else 1


def _write_report(report: Report, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    payload = json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    (out_dir / "report.json").write_text(payload)
    (out_dir / "cases.tsv").write_text(report.to_tsv())
    if report.exhibits:
        render_elements(
            report.exhibits,
            str(out_dir / "figure.svg"),
            title=f"{report.suite} (N={report.base}, seed={report.seed})",
        )


def _check_base_flag(args: argparse.Namespace, file_base: int) -> None:
    if args.base is not None and args.base != file_base:
        raise ConstraintError(
            f"--base {args.base} conflicts with the document base {file_base}"
        )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"validation error ({exc.code}): {exc}", file=sys.stderr)
        return 3
    except ConstraintError as exc:
        print(f"constraint error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
