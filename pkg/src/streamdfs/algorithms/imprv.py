"""Level-per-pass DFS: every unvisited component gains one vertex per pass."""
from __future__ import annotations

from typing import Optional

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..stream import ROOT, EdgeStream, SpaceMeter
from .common import Run, budget_for


def run_imprv(stream: EdgeStream, meter: Optional[SpaceMeter] = None):
    """Each pass finds the components of the unvisited graph and, per unvisited
    vertex, its first edge to a leaf of T.  Every component then hangs its
    earliest such vertex below that leaf.

    The lowest tree neighbour of any component is always a current leaf, so
    pass ``i`` adds exactly the level-``i`` vertices and the pass count equals
    the output height.
    """
    n = stream.n
    meter = meter or SpaceMeter(budget_for("imprv", n - 1, 1))
    run = Run(stream, meter)
    T = run.T
    in_tree = np.zeros(n, dtype=bool)
    in_tree[ROOT] = True
    leaf = np.zeros(n, dtype=bool)
    leaf[ROOT] = True
    while T.size < n:
        U, V = stream.scan_arrays()
        iu, iv = in_tree[U], in_tree[V]
        free = ~iu & ~iv
        fu, fv = U[free], V[free]
        g = coo_matrix((np.ones(len(fu), dtype=np.int8), (fu, fv)), shape=(n, n))
        _, label = connected_components(g, directed=False)

        fwd = leaf[U] & ~iv
        bwd = leaf[V] & ~iu
        pos = np.flatnonzero(fwd | bwd)
        ys = np.where(fwd[pos], V[pos], U[pos])
        # first recorded edge per unvisited vertex
        ys_first, first = np.unique(ys, return_index=True)
        meter.charge(len(ys_first), "imprv leaf edges")
        cand_pos = pos[first]
        # per component, the candidate seen earliest in the stream
        order = np.argsort(cand_pos, kind="stable")
        comp = label[ys_first[order]]
        _, pick = np.unique(comp, return_index=True)
        chosen = order[pick]
        new = []
        for i in chosen.tolist():
            p = int(cand_pos[i])
            y = int(ys_first[i])
            x = int(U[p] if y == V[p] else V[p])
            T.attach(y, x)
            new.append(y)
        meter.release(len(ys_first), "imprv pass end")
        if not new:
            raise RuntimeError("no unvisited vertex touches a leaf; stream is not augmented")
        leaf[:] = False
        leaf[new] = True
        in_tree[new] = True
    return run.finish()
