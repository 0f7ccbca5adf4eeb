from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Optional

from ..stream import ROOT, EdgeStream, PassStats, SpaceMeter
from ..tree import DfsTree

ALGORITHMS = ("simpo", "simp", "imprv", "kpath", "klevo", "klev")
K_DEPENDENT = ("kpath", "klevo", "klev")


@dataclass
class AlgoConfig:
    algorithm: str = "klev"
    k: int = 1
    space_mult: Optional[float] = None  # None picks the per-algorithm default
    enforce: bool = True
    check: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; choose from {', '.join(ALGORITHMS)}")
        if self.k < 1:
            raise ValueError("k must be at least 1")


def budget_for(algorithm: str, n: int, k: int, space_mult: Optional[float] = None) -> int:
    """Stored-edge budget for ``n`` real vertices.

    kpath keeps ``|V_C| k`` buffered edges plus a spanning tree per
    component, hence ``n k + n``.  kLev keeps ``H_C`` within ``c n k`` with
    ``c = 4`` by default.  The simple algorithms keep one edge per vertex.
    """
    if algorithm == "kpath":
        mult = 1.0 if space_mult is None else space_mult
        return int(mult * n * k) + n
    if algorithm in ("klev", "klevo"):
        mult = 4.0 if space_mult is None else space_mult
        return int(mult * n * k)
    mult = 1.0 if space_mult is None else space_mult
    return int(mult * (n + 1))


def attach_component_to_T(
    T: DfsTree,
    root: int,
    attach_parent: Optional[int],
    parent: dict[int, int] | list[int],
    order: Iterable[int],
) -> DfsTree:
    """Graft a tree slice onto ``T``; ``order`` lists the slice parents-first.

    The slice root hangs from ``attach_parent`` (already in ``T``); every
    other vertex hangs from its slice parent.
    """
    for v in order:
        if v == root:
            if attach_parent is not None:
                T.attach(v, attach_parent)
            elif v != T.root:
                raise ValueError("only the tree root may be attached without a parent")
        else:
            T.attach(v, parent[v])
    return T


class Run:
    """Shared bookkeeping for one algorithm run."""

    def __init__(self, stream: EdgeStream, meter: SpaceMeter):
        self.stream = stream
        self.meter = meter
        self.T = DfsTree(stream.n, ROOT)
        self.t0 = time.perf_counter()
        stream.reset_counters()

    def finish(self, **extra) -> tuple[DfsTree, PassStats]:
        stats = PassStats(
            passes=self.stream.passes,
            edges_scanned=self.stream.edges_scanned,
            peak_stored_edges=self.meter.peak,
            tree_height=self.T.height,
            wall_time=time.perf_counter() - self.t0,
            extra=dict(extra, budget=self.meter.budget_edges, violations=self.meter.violations),
        )
        return self.T, stats
