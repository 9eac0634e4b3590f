"""Command line front end: group queries, degree computation, suite runs.

Exit codes: 0 for success with no violated checks, 1 when the suite finds a
violated statement (flagged discrepancy records do not count), 2 for usage,
spec, or limit errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .coset_enum import DEFAULT_MAX_COSETS, dump_table, tensor_square_presentation, todd_coxeter
from .degrees import (
    comm_degree,
    format_decimal,
    format_fraction,
    rel_n_tensor_degree,
    tensor_degree,
)
from .errors import GroupTensorError
from .groups import (
    HARD_MAX_ORDER,
    all_subgroups,
    center,
    derived_subgroup,
    full_subgroup,
    nilpotency_class,
)
from .specs import group_from_spec, subgroup_from_words
from .tensor import tensor_square, tensor_summary
from .verify import (
    Config,
    builtin_corpus,
    corpus_from_file,
    run_suite,
)


def _degree_line(value) -> str:
    return f"{format_fraction(value)} ({format_decimal(value)})"


def _cmd_info(args: argparse.Namespace) -> int:
    group = group_from_spec(args.spec, max_order=args.max_order)
    print(f"group: {group.name}")
    print(f"order: {group.order}")
    print(f"abelian: {'yes' if group.is_abelian() else 'no'}")
    print(f"center order: {center(group).order}")
    print(f"derived subgroup order: {derived_subgroup(group).order}")
    nc = nilpotency_class(group)
    print(f"nilpotency class: {nc if nc is not None else 'none'}")
    print(f"subgroup count: {len(all_subgroups(group))}")
    return 0


def _cmd_tensor(args: argparse.Namespace) -> int:
    group = group_from_spec(args.spec, max_order=args.max_order)
    data = tensor_square(group, max_cosets=args.max_cosets)
    info = tensor_summary(group, data)
    print(f"group: {group.name}")
    print(f"tensor square order: {info['tensor_square_order']}")
    print(f"J2 order: {info['j2_order']}")
    print(f"tensor center order: {info['tensor_center_order']}")
    cls = info["tensor_class"]
    print(f"tensor class: {cls if cls is not None else 'none'}")
    if args.dump_table:
        table = todd_coxeter(tensor_square_presentation(group), max_cosets=args.max_cosets)
        print(dump_table(table))
    return 0


def _cmd_degree(args: argparse.Namespace) -> int:
    group = group_from_spec(args.spec, max_order=args.max_order)
    data = tensor_square(group, max_cosets=args.max_cosets)
    print(f"group: {group.name}")
    print(f"d(G) = {_degree_line(comm_degree(group))}")
    print(f"d_tensor(G) = {_degree_line(tensor_degree(group, data))}")
    subgroup = (
        subgroup_from_words(group, args.subgroup)
        if args.subgroup is not None
        else full_subgroup(group)
    )
    n = args.n if args.n is not None else 1
    value = rel_n_tensor_degree(group, data, subgroup, n)
    label = "G" if args.subgroup is None else f"<{args.subgroup}>"
    print(f"d_tensor[n={n}]({label}, G) = {_degree_line(value)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    config = Config(
        max_cosets=args.max_cosets,
        max_order=args.max_order,
        n_values=tuple(range(1, args.n_max + 1)),
        fmt=args.format,
        jobs=args.jobs,
        out=args.out,
    )
    if args.corpus == "builtin":
        corpus = builtin_corpus(config.max_order)
    else:
        corpus = corpus_from_file(args.corpus, config.max_order)
    report = run_suite(corpus, args.theorems, config)
    rendered = report.render(config.fmt)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(rendered)
    else:
        sys.stdout.write(rendered)
    summary = report.summary
    print(
        f"checks: {len(report.checks)}  pass: {summary['pass']}  "
        f"fail: {summary['fail']}  skipped: {summary['skipped']}  "
        f"flagged: {summary['flagged']}",
        file=sys.stderr,
    )
    return 1 if summary["fail"] > 0 else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grouptensor",
        description=(
            "Tensor squares, tensor degrees, and exact verification of degree "
            "bounds for small finite groups"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("spec", help="group spec, e.g. D8, C2xC4, E2^3")
        p.add_argument(
            "--max-order",
            type=int,
            default=HARD_MAX_ORDER,
            help=f"largest accepted group order (default {HARD_MAX_ORDER})",
        )
        p.add_argument(
            "--max-cosets",
            type=int,
            default=DEFAULT_MAX_COSETS,
            help="coset limit for tensor-square enumeration",
        )

    p_info = sub.add_parser("info", help="order, center, derived subgroup, class")
    add_common(p_info)
    p_info.set_defaults(func=_cmd_info)

    p_tensor = sub.add_parser("tensor", help="tensor square and derived structure")
    add_common(p_tensor)
    p_tensor.add_argument(
        "--dump-table",
        action="store_true",
        help="dump the coset table of the tensor-square enumeration",
    )
    p_tensor.set_defaults(func=_cmd_tensor)

    p_degree = sub.add_parser("degree", help="exact degree quantities")
    add_common(p_degree)
    p_degree.add_argument(
        "--subgroup",
        help='subgroup generators as comma-separated words, e.g. "a^2,a*b"',
    )
    p_degree.add_argument("--n", type=int, help="degree index (default 1)")
    p_degree.set_defaults(func=_cmd_degree)

    p_verify = sub.add_parser("verify", help="run the check suite over a corpus")
    p_verify.add_argument(
        "--corpus",
        default="builtin",
        help="'builtin' or a path to a file with one spec per line ('#' comments)",
    )
    p_verify.add_argument(
        "--theorems",
        default="all",
        help="comma-separated check ids, or 'all'",
    )
    p_verify.add_argument("--max-order", type=int, default=16)
    p_verify.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p_verify.add_argument(
        "--n-max", type=int, default=4, help="largest degree index to exercise"
    )
    p_verify.add_argument("--out", help="write the report here instead of stdout")
    p_verify.add_argument(
        "--format", choices=("json", "csv", "table"), default="json"
    )
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GroupTensorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
