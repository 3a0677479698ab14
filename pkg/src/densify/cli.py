"""``densify`` command line: decompose, compare, profile.

Exit codes: 0 success, 1 data error (unreadable or malformed input, oracle
refusal), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .graph import Graph, ParseError, load_edge_list
from .metrics import profile
from .oracle import OracleRefused, brute_locally_dense_chain
from .report import (
    ALGORITHMS,
    DecompositionReport,
    compare_report,
    compare_tsv,
    fraction_str,
    profile_tsv,
    run,
)


class DataError(Exception):
    pass


def _load(path: str) -> Graph:
    try:
        with open(path, "rb") as fh:
            return load_edge_list(fh)
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise DataError(f"{path}: {exc}") from None
    except UnicodeDecodeError as exc:
        raise DataError(f"{path}: not valid UTF-8 ({exc.reason})") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _algo_list(value: str) -> list[str]:
    algos = [a.strip() for a in value.split(",") if a.strip()]
    bad = [a for a in algos if a not in ALGORITHMS]
    if bad or not algos:
        raise argparse.ArgumentTypeError(
            f"unknown algorithm(s) {', '.join(bad) or '(none)'}; choose from {', '.join(ALGORITHMS)}"
        )
    return algos


def cmd_decompose(args: argparse.Namespace) -> int:
    graph = _load(args.input)
    chain, elapsed = run(graph, args.algo)
    report = DecompositionReport.from_chain(graph, chain, args.algo, elapsed)
    if args.oracle:
        try:
            reference = brute_locally_dense_chain(graph)
        except OracleRefused as exc:
            raise DataError(str(exc)) from None
        report.extra["oracle"] = {
            "matches_exact": reference.sets == chain.sets if args.algo == "exact" else None,
            "densities": [fraction_str(d) for d in reference.step_densities],
        }
    text = report.to_json() + "\n" if args.output == "json" else report.to_tsv()
    _emit(text, args.out)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    graph = _load(args.input)
    doc = compare_report(graph, args.algos)
    text = json.dumps(doc, indent=2) + "\n" if args.output == "json" else compare_tsv(doc)
    _emit(text, args.out)
    return 0


def cmd_profile(args: argparse.Namespace) -> int:
    graph = _load(args.input)
    chain, _ = run(graph, args.algo)
    values = profile(chain, graph.n)
    if args.output == "json":
        text = json.dumps({"algorithm": args.algo, "profile": [fraction_str(x) for x in values]}) + "\n"
    else:
        text = profile_tsv(values)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="densify",
        description="Locally-dense, greedy and k-core decompositions of undirected graphs.",
    )
    parser.add_argument("--seed", type=int, default=None, help="reserved; all algorithms are deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="edge-list file, one 'u w' pair per line")
    common.add_argument("--out", default=None, help="write to this file instead of stdout")

    p = sub.add_parser("decompose", parents=[common], help="run one decomposition")
    p.add_argument("--algo", required=True, choices=list(ALGORITHMS))
    p.add_argument("--output", choices=["json", "tsv"], default="json")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="also run the exponential brute-force reference (n <= 14 only)",
    )
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("compare", parents=[common], help="compare decompositions")
    p.add_argument("--algos", type=_algo_list, default=["exact", "greedy", "core"])
    p.add_argument("--output", choices=["json", "tsv"], default="json")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("profile", parents=[common], help="profile function of one decomposition")
    p.add_argument("--algo", required=True, choices=list(ALGORITHMS))
    p.add_argument("--output", choices=["json", "tsv"], default="tsv")
    p.set_defaults(func=cmd_profile)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DataError as exc:
        print(f"densify: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
