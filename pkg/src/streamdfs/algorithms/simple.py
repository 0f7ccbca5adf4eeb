"""One-vertex-per-pass DFS (SimpO) and its chasing variant (Simp)."""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from ..stream import ROOT, EdgeStream, SpaceMeter
from ..tree import DfsTree, NO_PARENT
from .common import Run, budget_for

log = logging.getLogger(__name__)


def run_simp_o(stream: EdgeStream, meter: Optional[SpaceMeter] = None):
    """Each pass stores, per tree vertex, its first edge to an unvisited vertex.

    After the pass the walk climbs from the current vertex to its lowest
    ancestor holding such an edge and attaches exactly one vertex.  The pass
    itself is evaluated with numpy over the stream arrays: among edges with
    exactly one endpoint in the tree, the one whose tree endpoint is deepest
    on the current root path wins, ties going to stream order, which is the
    same edge the per-vertex "first seen" records would give.
    """
    n = stream.n
    meter = meter or SpaceMeter(budget_for("simpo", n - 1, 1))
    run = Run(stream, meter)
    T = run.T
    in_tree = np.zeros(n, dtype=bool)
    in_tree[ROOT] = True
    on_path = np.full(n, -1, dtype=np.int64)  # level if on the current root path
    on_path[ROOT] = 0
    cur = ROOT
    while T.size < n:
        U, V = stream.scan_arrays()
        iu, iv = in_tree[U], in_tree[V]
        fwd = iu & ~iv
        cand = fwd | (iv & ~iu)
        x = np.where(fwd, U, V)
        stored = np.count_nonzero(np.bincount(x[cand], minlength=n))
        meter.charge(stored, "simpo pass records")
        score = np.where(cand, on_path[x], -1)
        i = int(np.argmax(score))
        if score[i] < 0:
            raise RuntimeError("no edge leaves the tree; stream is not augmented")
        anc = int(x[i])
        y = int(V[i] if fwd[i] else U[i])
        while cur != anc:
            on_path[cur] = -1
            cur = T.parent[cur]
        T.attach(y, anc)
        in_tree[y] = True
        on_path[y] = T.level[y]
        cur = y
        meter.release(stored, "simpo pass end")
    return run.finish()


def run_simp(stream: EdgeStream, meter: Optional[SpaceMeter] = None):
    """SimpO plus chasing: once the current vertex gains a child mid-pass, the
    rest of the pass keeps extending the new vertex."""
    n = stream.n
    meter = meter or SpaceMeter(budget_for("simp", n - 1, 1))
    run = Run(stream, meter)
    T = run.T
    in_tree = T.in_tree
    parent = T.parent
    cand = [NO_PARENT] * n
    stamp = [0] * n
    cur = ROOT
    pass_id = 0
    while T.size < n:
        pass_id += 1
        progress = False
        stored = 0
        for a, b in stream.scan():
            ia = in_tree[a]
            if ia == in_tree[b]:
                continue
            if ia:
                x, y = a, b
            else:
                x, y = b, a
            if x == cur:
                T.attach(y, x)
                cur = y
                progress = True
            elif stamp[x] != pass_id:
                stamp[x] = pass_id
                cand[x] = y
                stored += 1
                meter.charge(1, "simp record")
        if not progress:
            while stamp[cur] != pass_id:
                cur = parent[cur]
            y = cand[cur]
            T.attach(y, cur)
            cur = y
        meter.release(stored, "simp pass end")
    return run.finish()
