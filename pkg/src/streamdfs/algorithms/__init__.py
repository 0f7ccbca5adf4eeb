"""Streaming DFS-tree constructions and a name-based dispatcher."""
from __future__ import annotations

from typing import Optional

from ..stream import EdgeStream, PassStats, SpaceMeter
from ..tree import DfsTree
from .common import ALGORITHMS, K_DEPENDENT, AlgoConfig, attach_component_to_T, budget_for
from .imprv import run_imprv
from .klev import run_k_lev, run_k_lev_o
from .kpath import run_k_path
from .simple import run_simp, run_simp_o


def make_meter(config: AlgoConfig, n_original: int) -> SpaceMeter:
    k = config.k if config.algorithm in K_DEPENDENT else 1
    return SpaceMeter(budget_for(config.algorithm, n_original, k, config.space_mult), enforce=config.enforce)


def run(config: AlgoConfig, stream: EdgeStream, meter: Optional[SpaceMeter] = None) -> tuple[DfsTree, PassStats]:
    """Run ``config.algorithm`` over ``stream``; the meter defaults to the algorithm's budget."""
    meter = meter or make_meter(config, stream.n - 1)
    algo = config.algorithm
    if algo == "simpo":
        return run_simp_o(stream, meter)
    if algo == "simp":
        return run_simp(stream, meter)
    if algo == "imprv":
        return run_imprv(stream, meter)
    if algo == "kpath":
        return run_k_path(stream, config.k, meter, check=config.check)
    return run_k_lev(stream, config.k, heuristic=(algo == "klev"), meter=meter, check=config.check)


__all__ = [
    "ALGORITHMS",
    "K_DEPENDENT",
    "AlgoConfig",
    "attach_component_to_T",
    "budget_for",
    "make_meter",
    "run",
    "run_imprv",
    "run_k_lev",
    "run_k_lev_o",
    "run_k_path",
    "run_simp",
    "run_simp_o",
]
