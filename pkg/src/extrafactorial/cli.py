"""Batch command-line interface.

Subcommands
    stats      whole-graph statistics
    efs        per-edge breakdown, or the full ranked profile as CSV
    enumerate  cycles with lengths, optionally restricted to an edge or pair
    verify     closed forms vs. the enumeration oracle, PASS/FAIL per check
    compare    rank/scale comparison of two graphs' profiles
    gen        seeded random graph written in the text format

Exit codes: 0 success, 1 domain error (bad graph, cap exceeded, failed
verification), 2 usage error (bad flags, unreadable file).
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import __version__
from .cycles import (
    EdgePairKind,
    count_all,
    count_through_edge,
    count_through_pair,
    cycle_length,
    enumerate_all,
    enumerate_through_edge,
    enumerate_through_pair,
)
from .efs import (
    efs_all,
    efs_breakdown,
    mean_length_all,
    mean_length_not_through,
    mean_squared_length,
    summational_graph,
)
from .errors import XfsError
from .graph import (
    CompleteWeightedGraph,
    format_weight,
    parse_graph,
    random_graph,
    serialize_graph,
)
from .profile import compare_profiles, export_profile_csv, ranked_profile

VERIFY_TOLERANCE = 1e-9


def _fmt(x: float) -> str:
    """Up to 12 significant digits, trailing zeros trimmed."""
    return format(x, ".12g")


def _edge_arg(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'u,v', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from None


def _pair_arg(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected 'u,v,x,y', got {text!r}")
    try:
        u, v, x, y = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from None
    return u, v, x, y


def _load(path: str) -> CompleteWeightedGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _cmd_stats(args: argparse.Namespace) -> int:
    g = _load(args.file)
    print(f"order {g.n}")
    print(f"edges {g.edge_count}")
    print(f"total_weight {_fmt(g.total_weight)}")
    print(f"mean_length {_fmt(mean_length_all(g))}")
    print(f"mean_squared_length {_fmt(mean_squared_length(g))}")
    return 0


def _cmd_efs(args: argparse.Namespace) -> int:
    g = _load(args.file)
    if args.edge is None:
        sys.stdout.write(export_profile_csv(ranked_profile(g)))
        return 0
    bd = efs_breakdown(g, args.edge)
    mean_not = None if g.n == 3 else mean_length_not_through(g, bd.edge)
    if args.csv:
        row = [
            str(bd.edge.u),
            str(bd.edge.v),
            format_weight(bd.x1),
            format_weight(bd.x2),
            format_weight(bd.x3),
            format_weight(bd.efs),
            format_weight(bd.efs / (g.n - 2)),
            "" if mean_not is None else format_weight(mean_not),
        ]
        print("u,v,x1,x2,x3,efs,mean_through,mean_not_through")
        print(",".join(row))
        return 0
    print(f"edge {bd.edge.u},{bd.edge.v}")
    print(f"x1 {_fmt(bd.x1)}")
    print(f"x2 {_fmt(bd.x2)}")
    print(f"x3 {_fmt(bd.x3)}")
    print(f"efs {_fmt(bd.efs)}")
    print(f"mean_through {_fmt(bd.efs / (g.n - 2))}")
    if mean_not is not None:
        print(f"mean_not_through {_fmt(mean_not)}")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    g = _load(args.file)
    if args.through is not None:
        stream = enumerate_through_edge(g.n, args.through, max_order=args.max_order)
    elif args.pair is not None:
        u, v, x, y = args.pair
        _, stream = enumerate_through_pair(g.n, (u, v), (x, y), max_order=args.max_order)
    else:
        stream = enumerate_all(g.n, max_order=args.max_order)
    emitted = 0
    for cycle in stream:
        print(f"{cycle}  {_fmt(cycle_length(g, cycle))}")
        emitted += 1
        if args.limit is not None and emitted >= args.limit:
            break
    return 0


def _close(value: float, reference: float) -> bool:
    return abs(value - reference) <= VERIFY_TOLERANCE * (1.0 + abs(reference))


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load(args.file)
    n = g.n
    cap = args.max_n_override
    quiet = args.quiet
    failures = 0

    def report(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        if ok:
            if not quiet:
                print(f"PASS {name}")
        else:
            failures += 1
            suffix = f": {detail}" if detail else ""
            print(f"FAIL {name}{suffix}")

    total_cycles = sum(1 for _ in enumerate_all(n, max_order=cap))
    report(
        "cycle_count",
        total_cycles == count_all(n),
        f"{total_cycles} != {count_all(n)}",
    )

    lengths_sum = math.fsum(
        cycle_length(g, c) for c in enumerate_all(n, max_order=cap)
    )
    squares_sum = math.fsum(
        cycle_length(g, c) ** 2 for c in enumerate_all(n, max_order=cap)
    )

    through_counts_ok = True
    membership_ok = True
    efs_ok = True
    partition_ok = True
    summational_ok = True
    complement_ok = True
    expected_through = count_through_edge(n)
    shrink = math.factorial(n - 3)
    breakdowns = efs_all(g)
    for e in g.edges():
        count = 0
        lengths = []
        for cycle in enumerate_through_edge(n, e, max_order=cap):
            count += 1
            if not cycle.contains_edge(*e):
                membership_ok = False
            lengths.append(cycle_length(g, cycle))
        if count != expected_through:
            through_counts_ok = False
        oracle_sum = math.fsum(lengths)
        bd = breakdowns[e]
        if not _close(bd.efs * shrink, oracle_sum):
            efs_ok = False
        if not _close(bd.x1 + bd.x2 + bd.x3, g.total_weight):
            partition_ok = False
        if not _close(summational_graph(g, e).total_weight(), oracle_sum):
            summational_ok = False
        if n > 3:
            oracle_complement = (lengths_sum - oracle_sum) / (
                count_all(n) - expected_through
            )
            if not _close(mean_length_not_through(g, e), oracle_complement):
                complement_ok = False
    report("through_edge_count", through_counts_ok)
    report("through_edge_membership", membership_ok)
    report("efs_closed_form", efs_ok)
    report("breakdown_partition", partition_ok)
    report("summational_total", summational_ok)
    if n > 3:
        report("complement_mean", complement_ok)

    report(
        "mean_length_all",
        _close(mean_length_all(g), lengths_sum / total_cycles),
    )
    report(
        "mean_squared_length",
        _close(mean_squared_length(g), squares_sum / total_cycles),
    )

    kind, stream = enumerate_through_pair(n, (0, 1), (1, 2), max_order=cap)
    report(
        "adjacent_pair_count",
        sum(1 for _ in stream) == count_through_pair(n, kind),
    )
    if n >= 4:
        kind, stream = enumerate_through_pair(n, (0, 1), (2, 3), max_order=cap)
        report(
            "non_adjacent_pair_count",
            sum(1 for _ in stream) == count_through_pair(n, kind),
        )

    return 1 if failures else 0


def _cmd_compare(args: argparse.Namespace) -> int:
    p1 = ranked_profile(_load(args.file_a))
    p2 = ranked_profile(_load(args.file_b))
    outcome = compare_profiles(p1, p2)
    print(f"same_ranking {'true' if outcome.same_ranking else 'false'}")
    scale = "none" if outcome.scale_factor is None else _fmt(outcome.scale_factor)
    print(f"scale_factor {scale}")
    print(f"max_relative_deviation {_fmt(outcome.max_relative_deviation)}")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    g = random_graph(args.n, args.seed, args.lo, args.hi)
    Path(args.output).write_text(serialize_graph(g), encoding="utf-8")
    if not args.quiet:
        print(f"wrote {args.output} (order {g.n}, {g.edge_count} edges)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xfs",
        description="Extra-factorial sums and Hamiltonian-cycle statistics "
        "of complete weighted graphs.",
    )
    parser.add_argument("--version", action="version", version=f"xfs {__version__}")
    parser.add_argument(
        "--quiet",
        action="store_true",
        help="suppress everything but machine-readable output",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="whole-graph statistics")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("efs", help="per-edge breakdown or full ranked profile")
    p.add_argument("file")
    p.add_argument("--edge", type=_edge_arg, help="edge 'u,v'; omit for the profile")
    p.add_argument("--csv", action="store_true", help="CSV output for --edge")
    p.set_defaults(handler=_cmd_efs)

    p = sub.add_parser("enumerate", help="cycles with lengths, one per line")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--through", type=_edge_arg, help="only cycles through 'u,v'")
    group.add_argument(
        "--pair", type=_pair_arg, help="only cycles through both 'u,v' and 'x,y'"
    )
    p.add_argument("--limit", type=int, help="stop after this many cycles")
    p.add_argument(
        "--max-order",
        type=int,
        dest="max_order",
        help="override the enumeration cap",
    )
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("verify", help="closed forms vs. the enumeration oracle")
    p.add_argument("file")
    p.add_argument(
        "--max-n-override",
        type=int,
        dest="max_n_override",
        help="override the enumeration cap",
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("compare", help="compare two graphs' ranked profiles")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("gen", help="write a seeded random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--lo", type=float, default=0.0)
    p.add_argument("--hi", type=float, default=1.0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_gen)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except XfsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())
