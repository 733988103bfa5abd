"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 infeasible request, 4 search-space
guard exceeded.
"""
from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
from contextlib import contextmanager

from divpart import __version__
from divpart.bench import run_bench, write_csv
from divpart.diversity import as_counts, hill_number, simpson_index
from divpart.errors import DivpartError, Infeasible, SearchSpaceTooLarge, TooFewResources
from divpart.oracle import DEFAULT_GUARD
from divpart.perfect import perfect_verdict
from divpart.report import format_float, oracle_report, ratio_to_json, solve_report
from divpart.scenarios import SCENARIOS, scenario_data, scenario_text

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_GUARD = 0, 2, 3, 4
GUARD_ENV = "DIVPART_GUARD"


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return as_counts(int(v) for v in text.split(","))
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated nonnegative integers: {exc}")


def _order(text: str) -> float:
    if text.lower() in ("inf", "infinity"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be a number or 'inf', got {text!r}")


def _guard(args) -> int:
    if args.guard is not None:
        return args.guard
    env = os.environ.get(GUARD_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise DivpartError(f"{GUARD_ENV} must be an integer, got {env!r}")
    return DEFAULT_GUARD


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _emit(args, text: str) -> None:
    with _output(getattr(args, "out", None)) as fh:
        fh.write(text if text.endswith("\n") else text + "\n")


def cmd_diversity(args) -> int:
    counts = args.counts
    if args.order is None:
        value = simpson_index(counts)
        if args.format == "json":
            _emit(args, json.dumps({"counts": list(counts), "simpson": ratio_to_json(value.exact)}))
        else:
            _emit(args, f"{format_float(value.approx)}  (exact {value.exact})")
    else:
        value = hill_number(counts, args.order)
        if args.format == "json":
            _emit(args, json.dumps({"counts": list(counts), "order": args.order, "hill": value}))
        else:
            _emit(args, format_float(value))
    return EXIT_OK


def _render(args, report) -> None:
    _emit(args, report.to_json() if args.format == "json" else report.to_text())


def cmd_solve(args) -> int:
    budget = args.budget
    if len(budget) != 2:
        print(
            f"note: exact solving covers two types; running the exhaustive oracle for r={len(budget)}",
            file=sys.stderr,
        )
        return cmd_oracle(args)
    _render(args, solve_report(budget[0], budget[1], args.parts))
    return EXIT_OK


def cmd_perfect(args) -> int:
    verdict = perfect_verdict(args.budget, args.parts)
    if args.format == "json":
        text = json.dumps(
            {
                "budget": list(args.budget),
                "k": args.parts,
                "max_parts": verdict.max_parts,
                "feasible": verdict.feasible_for_k,
                "witness": None if verdict.witness is None else [list(p) for p in verdict.witness],
            }
        )
    elif verdict.feasible_for_k:
        lines = [f"feasible: {args.parts} parts (max_parts {verdict.max_parts})"]
        lines += [f"  {tuple(p)}" for p in verdict.witness]
        text = "\n".join(lines)
    else:
        text = f"infeasible: max_parts {verdict.max_parts} < {args.parts}"
    _emit(args, text)
    return EXIT_OK if verdict.feasible_for_k else EXIT_INFEASIBLE


def cmd_oracle(args) -> int:
    _render(args, oracle_report(args.budget, args.parts, _guard(args), args.method))
    return EXIT_OK


def cmd_scenario(args) -> int:
    if args.format == "json":
        _emit(args, json.dumps(scenario_data(args.name), indent=2))
    else:
        _emit(args, scenario_text(args.name))
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = run_bench(args.max_bits, args.k_max, args.trials, args.seed)
    buf = io.StringIO()
    write_csv(rows, buf)
    _emit(args, buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divpart", description="Diversity-preserving partitions of type-count vectors."
    )
    parser.add_argument("--version", action="version", version=f"divpart {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        return p

    p = add("diversity", cmd_diversity, "Simpson index or Hill number of a count vector")
    p.add_argument("--counts", "--budget", dest="counts", type=_int_list, required=True)
    p.add_argument("--order", type=_order, help="Hill order q (number or 'inf'); default Simpson")

    for name, func, help in (
        ("solve", cmd_solve, "optimal two-type partition"),
        ("perfect", cmd_perfect, "perfect-partition verdict and witness"),
        ("oracle", cmd_oracle, "exhaustive maximin search (small instances)"),
    ):
        p = add(name, func, help)
        p.add_argument("--budget", type=_int_list, required=True)
        p.add_argument("--parts", type=int, required=True, metavar="K")
        if name != "perfect":
            p.add_argument("--guard", type=int, help=f"search-space guard (env {GUARD_ENV})")
            p.add_argument("--method", choices=("auto", "enumerate", "lattice"), default="auto")

    p = add("scenario", cmd_scenario, "reproduce a worked example")
    p.add_argument("name", choices=SCENARIOS)

    p = add("bench", cmd_bench, "time the solver on random coprime budgets", formats=("csv",))
    p.add_argument("--max-bits", type=int, default=64)
    p.add_argument("--k-max", type=int, default=2)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SearchSpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (TooFewResources, Infeasible) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (DivpartError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
