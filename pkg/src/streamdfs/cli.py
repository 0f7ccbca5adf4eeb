"""Command line entry point: ``run``, ``experiment`` and ``validate``."""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .algorithms import ALGORITHMS
from .experiment import SWEEP_AXES, ExperimentSpec, run_experiment, run_on_graph, write_rows
from .stream import BudgetExceeded, StreamError, ingest_edge_list, random_graph
from .tree import NotSpanningError, TreeFormatError, read_tree, validate_dfs, write_tree

log = logging.getLogger("streamdfs")

LOG_LEVELS = {"off": logging.WARNING, "stats": logging.INFO, "trace": logging.DEBUG}

EXIT_OK, EXIT_INVALID, EXIT_ERROR = 0, 1, 2


def setup_logging() -> None:
    mode = os.environ.get("DFS_STREAM_LOG", "off").strip().lower()
    if mode not in LOG_LEVELS:
        print(f"warning: DFS_STREAM_LOG={mode!r} not in {sorted(LOG_LEVELS)}; using 'off'", file=sys.stderr)
        mode = "off"
    logging.basicConfig(level=LOG_LEVELS[mode], format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def parse_random(spec: str) -> tuple[int, int, int]:
    try:
        n, m, seed = (int(x) for x in spec.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,m,seed, got {spec!r}") from None
    return n, m, seed


def parse_int_list(spec: str) -> list[int]:
    try:
        return [int(x) for x in spec.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {spec!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="streamdfs", description="Semi-streaming DFS tree construction.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run one algorithm on one graph")
    r.add_argument("--algo", required=True, choices=ALGORITHMS)
    src = r.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", type=Path, help="edge list file")
    src.add_argument("--random", type=parse_random, metavar="N,M,SEED", help="G(n,m) random graph")
    r.add_argument("-k", type=int, default=1, help="space parameter (kpath, klevo, klev)")
    r.add_argument("--space-mult", type=float, default=None, help="budget multiplier")
    r.add_argument("--no-enforce", action="store_true", help="warn instead of failing on budget overrun")
    r.add_argument("--validate", action="store_true", help="check the output tree against the graph")
    r.add_argument("--tree-out", type=Path, help="write the tree as 'v parent level' lines")
    r.add_argument("--out", type=Path, help="CSV output (default stdout)")

    e = sub.add_parser("experiment", help="sweep n, m or k over random graphs")
    e.add_argument("--sweep", required=True, choices=SWEEP_AXES)
    e.add_argument("--algo", type=lambda s: s.split(","), default=None, help="comma separated algorithms")
    e.add_argument("--trials", type=int, default=10)
    e.add_argument("--seed", type=int, default=0, help="base seed; trial i uses seed + i")
    e.add_argument("-k", type=int, default=10)
    e.add_argument("-n", type=int, default=1000, help="vertex count for m and k sweeps")
    e.add_argument("-m", type=int, default=None, help="edge count for the k sweep (default n ln n)")
    e.add_argument("--points", type=parse_int_list, default=None, help="override the sweep points")
    e.add_argument("--space-mult", type=float, default=None)
    e.add_argument("--no-enforce", action="store_true")
    e.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    e.add_argument("--out", type=Path, help="CSV output (default stdout)")

    v = sub.add_parser("validate", help="check a tree file against a graph file")
    v.add_argument("graph", type=Path)
    v.add_argument("tree", type=Path)
    return p


def _open_out(path: Optional[Path]):
    return open(path, "w", newline="") if path else sys.stdout


def cmd_run(args) -> int:
    if args.k < 1:
        print("error: -k must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    if args.input is not None:
        g = ingest_edge_list(args.input.read_bytes(), name=args.input.stem)
        seed = ""
    else:
        n, m, seed = args.random
        g = random_graph(n, m, seed)
        g.name = "gnm"
    try:
        tree, stats, row, stream = run_on_graph(g, args.algo, args.k, seed, args.space_mult, not args.no_enforce)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if stats.extra.get("violations"):
        print(f"warning: space budget exceeded {stats.extra['violations']} times", file=sys.stderr)
    if args.tree_out:
        with open(args.tree_out, "w") as fh:
            write_tree(tree, fh)
    fh = _open_out(args.out)
    try:
        write_rows([row], fh)
    finally:
        if args.out:
            fh.close()
    if args.validate:
        ok, bad = validate_dfs(stream.edges(), tree)
        if not ok:
            print(f"invalid DFS tree: cross edge {bad[0]} {bad[1]}", file=sys.stderr)
            return EXIT_INVALID
    return EXIT_OK


def cmd_experiment(args) -> int:
    spec = ExperimentSpec(
        axis=args.sweep,
        trials=args.trials,
        base_seed=args.seed,
        algorithms=tuple(args.algo) if args.algo else (),
        n=args.n,
        m=args.m,
        k=args.k,
        points=args.points,
        space_mult=args.space_mult,
        enforce=not args.no_enforce,
        jobs=max(1, args.jobs),
    )
    bad = [a for a in spec.algorithms if a not in ALGORITHMS]
    if bad:
        print(f"error: unknown algorithm(s) {', '.join(bad)}", file=sys.stderr)
        return EXIT_ERROR
    rows = run_experiment(spec)
    fh = _open_out(args.out)
    try:
        write_rows(rows, fh)
    finally:
        if args.out:
            fh.close()
    return EXIT_OK


def cmd_validate(args) -> int:
    try:
        g = ingest_edge_list(args.graph.read_bytes(), name=args.graph.stem)
        tree = read_tree(args.tree.read_text(), n=g.n_aug)
        edges = [(0, v) for v in range(1, g.n_aug)] + g.edges
        ok, bad = validate_dfs(edges, tree)
    except (StreamError, TreeFormatError, NotSpanningError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if not ok:
        print(f"invalid DFS tree: cross edge {bad[0]} {bad[1]}")
        return EXIT_INVALID
    print(f"valid DFS tree: {g.n_aug} vertices, height {tree.height}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(args)
        if args.command == "experiment":
            return cmd_experiment(args)
        return cmd_validate(args)
    except (StreamError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
