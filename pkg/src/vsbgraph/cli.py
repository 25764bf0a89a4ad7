"""Command-line front end.

Subcommands: ``gen`` (write a random 3-vsb instance), ``check`` (test a
connectivity predicate on an edge-list file), ``minimize`` (extract a
sparse 3-vsb spanning subgraph), ``bench`` (run the experiment table).

Exit codes: 0 success / predicate true; 1 predicate false or failed
precondition; 2 usage or input-parse errors.
"""
from __future__ import annotations

import argparse
import sys

from .connectivity import is_k_vsb, is_strongly_biconnected
from .digraph import Digraph, parse_edge_list, serialize_edge_list
from .errors import GraphError, NotKVsbError
from .extraction import minimal_k_vsb, two_phase_3vsb
from .generator import InstanceSpec, generate
from .harness import ExperimentPlan, emit_table, run_experiment


def _read_graph(path: str) -> Digraph:
    with open(path, "r", encoding="ascii") as handle:
        return parse_edge_list(handle.read())


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii") as handle:
        handle.write(text)


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = InstanceSpec(args.n, args.mult * args.n, args.seed)
        instance = generate(spec)
    except GraphError as exc:
        return _fail(1, str(exc))
    try:
        _write_text(args.out, serialize_edge_list(instance.graph))
    except OSError as exc:
        return _fail(2, str(exc))
    print(
        f"n={spec.n} m0={spec.initial_edges} "
        f"grown={instance.edges_added_in_growth} m={instance.graph.m}"
    )
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.infile)
    except (OSError, UnicodeDecodeError, GraphError) as exc:
        return _fail(2, str(exc))
    try:
        if args.k == 1:
            report = is_strongly_biconnected(g)
        else:
            report = is_k_vsb(g, args.k)
    except GraphError as exc:
        return _fail(1, str(exc))
    if report.verdict:
        print("true")
        return 0
    print(f"false: {report.witness}")
    return 1


def _cmd_minimize(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.infile)
    except (OSError, UnicodeDecodeError, GraphError) as exc:
        return _fail(2, str(exc))
    try:
        if args.algo == "minimal":
            result = minimal_k_vsb(g, 3, order=args.order, seed=args.seed)
        else:
            result = two_phase_3vsb(g, order=args.order, seed=args.seed)
    except NotKVsbError as exc:
        return _fail(1, f"{exc.witness}")
    except GraphError as exc:
        return _fail(1, str(exc))
    try:
        _write_text(args.out, serialize_edge_list(result.subgraph))
    except OSError as exc:
        return _fail(2, str(exc))
    stats = result.stats
    print(
        f"edges_in={stats.edges_in} edges_out={stats.edges_out} "
        f"tests_performed={stats.tests_performed} "
        f"elapsed_ms={stats.elapsed * 1e3:.0f}"
    )
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        plan = ExperimentPlan(
            sizes=tuple(args.sizes),
            seeds_per_size=args.seeds_per_size,
            multiplier=args.mult,
            fmt=args.format,
        )
    except ValueError as exc:
        return _fail(2, str(exc))
    rows = run_experiment(plan, workers=args.workers)
    table = emit_table(rows, plan.fmt)
    if args.out is None:
        sys.stdout.write(table)
        return 0
    try:
        _write_text(args.out, table)
    except OSError as exc:
        return _fail(2, str(exc))
    return 0


def _sizes_arg(text: str) -> list[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list: {text!r}")
    if not sizes:
        raise argparse.ArgumentTypeError("size list is empty")
    return sizes


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vsbgraph",
        description="Test and thin k-vertex strongly biconnected digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random 3-vsb instance")
    gen.add_argument("--n", type=int, required=True, help="vertex count (>= 4)")
    gen.add_argument("--seed", type=int, required=True, help="64-bit RNG seed")
    gen.add_argument(
        "--mult", type=int, default=8, help="initial edges = mult * n (default 8)"
    )
    gen.add_argument("--out", required=True, help="output edge-list file")
    gen.set_defaults(handler=_cmd_gen)

    check = sub.add_parser("check", help="test a connectivity predicate")
    check.add_argument("--in", dest="infile", required=True, help="edge-list file")
    check.add_argument(
        "--k",
        type=int,
        choices=(1, 2, 3),
        default=3,
        help="level: 1 = strongly biconnected, 2/3 = k-vsb (default 3)",
    )
    check.set_defaults(handler=_cmd_check)

    minimize = sub.add_parser("minimize", help="extract a sparse 3-vsb subgraph")
    minimize.add_argument(
        "--in", dest="infile", required=True, help="edge-list file (must be 3-vsb)"
    )
    minimize.add_argument(
        "--algo", choices=("minimal", "two-phase"), required=True
    )
    minimize.add_argument(
        "--order",
        choices=("input", "shuffle"),
        default="input",
        help="candidate edge order (default input)",
    )
    minimize.add_argument(
        "--seed", type=int, default=0, help="seed for --order shuffle"
    )
    minimize.add_argument("--out", required=True, help="output edge-list file")
    minimize.set_defaults(handler=_cmd_minimize)

    bench = sub.add_parser("bench", help="run the timing/edge-count experiment")
    bench.add_argument(
        "--sizes", type=_sizes_arg, required=True, help="comma-separated n values"
    )
    bench.add_argument("--seeds-per-size", type=int, default=3)
    bench.add_argument("--mult", type=int, default=8)
    bench.add_argument("--format", choices=("csv", "md"), default="csv")
    bench.add_argument("--out", default=None, help="output file (default stdout)")
    bench.add_argument(
        "--workers",
        type=int,
        default=1,
        help="row-level parallelism; timings stay comparable per row",
    )
    bench.set_defaults(handler=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    return args.handler(args)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
