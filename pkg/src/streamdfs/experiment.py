"""Parameter sweeps over random graphs and the CSV rows they produce."""
from __future__ import annotations

import csv
import logging
import math
import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np

from .algorithms import K_DEPENDENT, AlgoConfig, run
from .stream import EdgeStream, GraphInput, default_edge_count, random_graph

log = logging.getLogger(__name__)

SWEEP_AXES = ("n", "m", "k")
DEFAULT_ALGOS = {"n": ("simp", "imprv", "kpath", "klev"), "m": ("simp", "imprv", "kpath", "klev"), "k": ("kpath", "klev")}
NUMERIC = ("passes", "peak_stored_edges", "tree_height", "edges_scanned", "wall_time")


@dataclass
class ResultRow:
    dataset: str
    n: int
    m: int
    algorithm: str
    k: object  # int, or "" for algorithms without a space parameter
    passes: float
    peak_stored_edges: float
    tree_height: float
    edges_scanned: float
    seed: object  # int, "" for file inputs, "mean"/"std" on summary rows
    wall_time: float

    @classmethod
    def columns(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def as_list(self) -> list:
        out = []
        for name in self.columns():
            v = getattr(self, name)
            if isinstance(v, float):
                v = f"{v:.6f}" if name == "wall_time" else f"{v:.4f}".rstrip("0").rstrip(".")
            out.append(v)
        return out


def run_on_graph(
    graph: GraphInput,
    algorithm: str,
    k: int = 1,
    seed: object = "",
    space_mult: Optional[float] = None,
    enforce: bool = True,
    check: bool = False,
):
    """Run one algorithm on one graph; returns ``(tree, stats, row, stream)``."""
    config = AlgoConfig(algorithm, k if algorithm in K_DEPENDENT else 1, space_mult, enforce, check)
    stream = EdgeStream(graph)
    tree, stats = run(config, stream)
    log.info(
        "%s %s k=%s: passes=%d peak=%d height=%d scanned=%d %.3fs",
        graph.name, algorithm, config.k, stats.passes, stats.peak_stored_edges,
        stats.tree_height, stats.edges_scanned, stats.wall_time,
    )
    row = ResultRow(
        dataset=graph.name,
        n=graph.n_original,
        m=graph.m,
        algorithm=algorithm,
        k=config.k if algorithm in K_DEPENDENT else "",
        passes=stats.passes,
        peak_stored_edges=stats.peak_stored_edges,
        tree_height=stats.tree_height,
        edges_scanned=stats.edges_scanned,
        seed=seed,
        wall_time=stats.wall_time,
    )
    return tree, stats, row, stream


@dataclass(frozen=True)
class Trial:
    n: int
    m: int
    k: int
    algorithm: str
    seed: int
    space_mult: Optional[float] = None
    enforce: bool = True


def run_trial(t: Trial) -> ResultRow:
    g = random_graph(t.n, t.m, t.seed)
    g.name = "gnm"
    return run_on_graph(g, t.algorithm, t.k, t.seed, t.space_mult, t.enforce)[2]


def fib_points(limit: int) -> list[int]:
    """1, 2, 3, 5, 8, 13, ... up to ``limit``, with ``limit`` itself last."""
    pts = [1, 2]
    while pts[-1] + pts[-2] <= limit:
        pts.append(pts[-1] + pts[-2])
    pts = [p for p in pts if p <= limit]
    if pts[-1] != limit:
        pts.append(limit)
    return pts


def log_points(lo: int, hi: int, count: int) -> list[int]:
    raw = np.geomspace(lo, hi, count)
    return sorted({int(round(x)) for x in raw})


@dataclass
class ExperimentSpec:
    axis: str
    trials: int = 10
    base_seed: int = 0
    algorithms: Sequence[str] = ()
    n: int = 1000
    m: Optional[int] = None
    k: int = 10
    points: Optional[Sequence[int]] = None
    space_mult: Optional[float] = None
    enforce: bool = True
    jobs: int = field(default_factory=lambda: os.cpu_count() or 1)

    def __post_init__(self):
        if self.axis not in SWEEP_AXES:
            raise ValueError(f"sweep axis must be one of {SWEEP_AXES}, got {self.axis!r}")
        if self.trials < 1:
            raise ValueError("trial count must be at least 1")
        if not self.algorithms:
            self.algorithms = DEFAULT_ALGOS[self.axis]

    def sweep_points(self) -> list[int]:
        if self.points:
            return list(self.points)
        if self.axis == "n":
            return list(range(100, 1001, 100))
        if self.axis == "m":
            return log_points(self.n, self.n * (self.n - 1) // 2, 32)
        return fib_points(self.n)

    def trials_list(self) -> list[Trial]:
        out = []
        for p in self.sweep_points():
            n, m, k = self.n, self.m, self.k
            if self.axis == "n":
                n = p
            elif self.axis == "m":
                m = p
            else:
                k = p
            if m is None or self.axis == "n":
                m = default_edge_count(n)
            for algo in self.algorithms:
                for i in range(self.trials):
                    out.append(Trial(n, m, k, algo, self.base_seed + i, self.space_mult, self.enforce))
        return out


def summarize(rows: Sequence[ResultRow]) -> list[ResultRow]:
    """Mean and standard deviation rows per (dataset, n, m, algorithm, k) group."""
    groups: dict[tuple, list[ResultRow]] = {}
    for r in rows:
        groups.setdefault((r.dataset, r.n, r.m, r.algorithm, r.k), []).append(r)
    out = []
    for (dataset, n, m, algo, k), rs in groups.items():
        for label, fn in (("mean", statistics.fmean), ("std", _std)):
            vals = {c: fn([float(getattr(r, c)) for r in rs]) for c in NUMERIC}
            out.append(ResultRow(dataset, n, m, algo, k, seed=label, **vals))
    return out


def _std(xs: list[float]) -> float:
    return statistics.stdev(xs) if len(xs) > 1 else 0.0


def run_experiment(spec: ExperimentSpec) -> list[ResultRow]:
    """All trial rows in sweep order, followed by the summary rows."""
    trials = spec.trials_list()
    log.info("%d trials over %d points, jobs=%d", len(trials), len(spec.sweep_points()), spec.jobs)
    if spec.jobs > 1 and len(trials) > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as ex:
            rows = list(ex.map(run_trial, trials, chunksize=max(1, len(trials) // (4 * spec.jobs))))
    else:
        rows = [run_trial(t) for t in trials]
    return rows + summarize(rows)


def write_rows(rows: Iterable[ResultRow], fh: TextIO, header: bool = True) -> None:
    w = csv.writer(fh, lineterminator="\n")
    if header:
        w.writerow(ResultRow.columns())
    for r in rows:
        w.writerow(r.as_list())


def read_rows(fh: TextIO) -> list[dict]:
    return list(csv.DictReader(fh))


def bound_check(row: ResultRow) -> Optional[str]:
    """Theoretical pass bound for a trial row, or None when it holds."""
    n, h, p = row.n, row.tree_height, row.passes
    if row.algorithm == "simpo" and p != n:
        return f"simpo passes {p} != n {n}"
    if row.algorithm == "imprv" and p != h:
        return f"imprv passes {p} != height {h}"
    if row.algorithm == "kpath" and p > 1 + math.ceil(n / row.k):
        return f"kpath passes {p} > 1 + ceil(n/k)"
    if row.algorithm == "klevo" and p > 1 + math.ceil(h / row.k):
        return f"klevo passes {p} > 1 + ceil(h/k)"
    return None
