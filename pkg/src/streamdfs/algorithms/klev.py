"""Level-window DFS: each pass fixes the top ``k`` levels of every component.

Per component ``C`` the pass maintains ``H_C``: the spanning tree ``T_C``
plus every seen edge with an endpoint in the window (local levels below the
window depth).  Edges arriving inside one hanging subtree are skipped; the
rest are stored and restructured in with :meth:`SubgraphH.maintain_dfs`, and
stored edges that lost their last window endpoint are evicted.  Because
levels only grow, the window can only shrink during a pass, and at pass end
it is a valid DFS prefix.

With ``heuristic`` on, vertices below the window whose whole root path
stayed untouched during the pass are committed too.  A vertex counts as
touched when a reversal moved it, or when it is the lowest common ancestor
of an edge that was skipped although it arrived as a cross edge.  The
second mark is needed because skipped edges are never certified by
``H_C``; without it the committed extension can carry cross edges.
"""
from __future__ import annotations

import logging
from typing import Optional

from ..dsu import DisjointSet
from ..restructure import SubgraphH
from ..stream import ROOT, EdgeStream, SpaceMeter
from ..tree import NO_PARENT, LocalTree
from .common import Run, budget_for

log = logging.getLogger(__name__)


class _Component:
    __slots__ = ("root", "attach", "depth", "vertices")

    def __init__(self, root: int, attach: Optional[int], depth: int, vertices: list[int]):
        self.root = root
        self.attach = attach
        self.depth = depth
        self.vertices = vertices


def run_k_lev(
    stream: EdgeStream,
    k: int,
    heuristic: bool = True,
    meter: Optional[SpaceMeter] = None,
    check: bool = False,
):
    if k < 1:
        raise ValueError("k must be at least 1")
    n = stream.n
    meter = meter or SpaceMeter(budget_for("klev", n - 1, k))
    run = Run(stream, meter)
    T = run.T
    H = SubgraphH(n, meter=meter, check=check)
    level, parent, children = H.level, H.parent, H.children
    comp = [-1] * n
    rep = list(range(n))
    dirty = bytearray(n)
    seen_global = [0] * n  # provisional global levels, check mode only
    reversals = 0
    extra_commits = 0

    # pass 0: spanning tree of the augmented graph, rooted at the dummy root
    dsu = DisjointSet(n)
    forest = [(a, b) for a, b in stream.scan() if dsu.union(a, b)]
    t0 = LocalTree.from_edges(ROOT, forest)
    order = t0.bfs_order()
    if len(order) != n:
        raise RuntimeError("augmented graph is not connected")
    H.load_tree(ROOT, t0.parent, order)
    # the dummy root does not use up a level of the first window
    live = [_Component(ROOT, None, k + 1, order)]

    while live:
        for i, c in enumerate(live):
            d = c.depth
            for v in c.vertices:  # parents first
                comp[v] = i
                rep[v] = v if level[v] <= d else rep[parent[v]]
        dirty[:] = bytes(n)

        depth = 0
        crossed: list[int] = []

        def on_rehang(moved) -> None:
            for u, old in moved:
                lu = level[u]
                if lu <= depth:
                    rep[u] = u
                else:
                    rep[u] = rep[parent[u]]
                if old < depth <= lu:
                    crossed.append(u)
                if heuristic:
                    dirty[u] = 1

        for a, b in stream.scan():
            ca = comp[a]
            if ca < 0 or ca != comp[b]:
                continue
            depth = live[ca].depth
            if level[a] >= depth and level[b] >= depth and rep[a] == rep[b]:
                if heuristic:
                    wv = H.find_path_vertex_v(a, b)
                    if wv is not None:
                        dirty[parent[wv[1]]] = 1
                continue
            if parent[a] == b or parent[b] == a or H.has_nontree(a, b):
                continue
            H.add_nontree(a, b)
            del crossed[:]
            reversals += H.maintain_dfs(a, b, on_rehang)
            if check:
                bad = H.first_cross_edge()
                if bad is not None:
                    raise AssertionError(f"H holds cross edge {bad} after restructuring")
            if H.has_nontree(a, b) and level[a] >= depth and level[b] >= depth:
                H.remove_nontree(a, b)
            for u in crossed:
                if level[u] < depth:
                    continue
                for s in list(H.nontree.get(u, ())):
                    if level[s] >= depth:
                        H.remove_nontree(u, s)

        nxt: list[_Component] = []
        tree_edges_before = sum(len(c.vertices) - 1 for c in live)
        for c in live:
            d = c.depth
            ok: dict[int, bool] = {}
            bfs = [c.root]
            for u in bfs:
                p = parent[u]
                clean = heuristic and not dirty[u] and (u == c.root or ok[p])
                ok[u] = clean
                committed = level[u] < d or clean
                if committed:
                    if u == c.root:
                        if c.attach is not None:
                            T.attach(u, c.attach)
                    else:
                        T.attach(u, p)
                    if level[u] >= d:
                        extra_commits += 1
                    if check:
                        g = T.level[u]
                        if g < seen_global[u]:
                            raise AssertionError(f"vertex {u} rose from global level {seen_global[u]} to {g}")
                    bfs.extend(children[u])
                else:
                    # root of a hanging subtree: becomes a component of its own
                    sub = [u]
                    for w in sub:
                        sub.extend(children[w])
                    nxt.append(_Component(u, p, k, sub))
            H.drop_nontree(c.vertices)
            for v in c.vertices:
                comp[v] = -1
        for c in nxt:
            r = c.root
            children[c.attach].discard(r)
            parent[r] = NO_PARENT
            shift = level[r]
            for v in c.vertices:
                if check:
                    g = T.level[c.attach] + 1 + level[v] - shift
                    if g < seen_global[v]:
                        raise AssertionError(f"vertex {v} rose from global level {seen_global[v]} to {g}")
                    seen_global[v] = g
                level[v] -= shift
        tree_edges_after = sum(len(c.vertices) - 1 for c in nxt)
        meter.release(tree_edges_before - tree_edges_after, "klev commit")
        nxt.sort(key=lambda c: c.root)
        live = nxt
    return run.finish(reversals=reversals, extra_commits=extra_commits)


def run_k_lev_o(stream: EdgeStream, k: int, meter: Optional[SpaceMeter] = None, check: bool = False):
    return run_k_lev(stream, k, heuristic=False, meter=meter, check=check)
