"""Path-per-component DFS with ``|V_C| k`` buffered edges per component.

Every live component buffers its internal edges.  A component whose buffer
never fills is finished in the same pass from an in-memory DFS.  A component
whose buffer overflows commits the longest root path ``P`` of that DFS
(at least ``k`` edges long, by the min-height property) and spends the rest
of the pass splitting ``C - P`` into child components, each remembering its
deepest neighbour on ``P`` as its attachment point.
"""
from __future__ import annotations

import logging
from typing import Optional

from ..dsu import DisjointSet
from ..stream import ROOT, EdgeStream, SpaceMeter
from ..tree import NO_PARENT, LocalTree, longest_root_path
from .common import Run, attach_component_to_T, budget_for

log = logging.getLogger(__name__)

BUFFERING, SPLITTING = 0, 1


class _Component:
    __slots__ = ("vertices", "root", "attach", "tree", "cap", "buffer", "state", "path", "forest")

    def __init__(self, vertices: list[int], root: int, attach: int, tree: LocalTree, k: int):
        self.vertices = vertices
        self.root = root
        self.attach = attach
        self.tree = tree
        self.cap = len(vertices) * k
        self.buffer: dict[tuple[int, int], None] = {}
        self.state = BUFFERING
        self.path: list[int] = []
        self.forest: list[tuple[int, int]] = []


def dfs_local_tree(root: int, edges) -> LocalTree:
    """Iterative depth-first search over an in-memory edge set."""
    adj: dict[int, list[int]] = {root: []}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    t = LocalTree(root)
    stack = [(root, iter(adj[root]))]
    while stack:
        u, it = stack[-1]
        for w in it:
            if w not in t.parent:
                t.add(w, u)
                stack.append((w, iter(adj[w])))
                break
        else:
            stack.pop()
    return t


def run_k_path(stream: EdgeStream, k: int, meter: Optional[SpaceMeter] = None, check: bool = False):
    if k < 1:
        raise ValueError("k must be at least 1")
    n = stream.n
    meter = meter or SpaceMeter(budget_for("kpath", n - 1, k))
    run = Run(stream, meter)
    T = run.T
    in_tree = T.in_tree
    comp = [-1] * n  # index into ``live`` for uncommitted vertices
    path_drops: list[int] = []

    # pass 0: components of the real vertices and a spanning tree of each
    dsu = DisjointSet(n)
    forest = []
    for a, b in stream.scan():
        if a != ROOT and b != ROOT and dsu.union(a, b):
            forest.append((a, b))
    meter.charge(len(forest), "kpath spanning forest")
    groups: dict[int, list[int]] = {}
    for v in range(1, n):
        groups.setdefault(dsu.find(v), []).append(v)
    by_root: dict[int, list[tuple[int, int]]] = {}
    for a, b in forest:
        by_root.setdefault(dsu.find(a), []).append((a, b))
    live: list[_Component] = []
    for r in sorted(groups, key=lambda r: groups[r][0]):
        vs = groups[r]
        live.append(_Component(vs, vs[0], ROOT, LocalTree.from_edges(vs[0], by_root.get(r, [])), k))

    while live:
        for i, c in enumerate(live):
            for v in c.vertices:
                comp[v] = i
        split_dsu = DisjointSet(n, active=False)
        best = [NO_PARENT] * n  # deepest neighbour on the committed path
        best_level = [-1] * n

        def split(c: _Component) -> None:
            tree_edges = [(v, p) for v, p in c.tree.parent.items() if p != NO_PARENT]
            aux = dfs_local_tree(c.root, tree_edges + list(c.buffer))
            path = longest_root_path(aux)
            path_drops.append(len(path) - 1)
            if check and len(path) - 1 < k:
                raise AssertionError(f"full buffer gave a path of {len(path) - 1} < k={k} edges")
            T.attach(path[0], c.attach)
            for j in range(1, len(path)):
                T.attach(path[j], path[j - 1])
            c.path = path
            c.state = SPLITTING
            meter.release(len(tree_edges) + len(c.buffer), "kpath split")
            rest = [v for v in c.vertices if not in_tree[v]]
            split_dsu.activate(rest)
            for a, b in tree_edges:
                feed(c, a, b)
            for a, b in c.buffer:
                feed(c, a, b)
            c.buffer = {}
            c.tree = None

        def feed(c: _Component, a: int, b: int) -> None:
            ia, ib = in_tree[a], in_tree[b]
            if ia and ib:
                return
            if not ia and not ib:
                if split_dsu.union(a, b):
                    c.forest.append((a, b))
                    meter.charge(1, "kpath child forest")
                return
            x, y = (a, b) if ia else (b, a)
            lx = T.level[x]
            if lx > best_level[y]:
                if best[y] == NO_PARENT:
                    meter.charge(1, "kpath lowest path edge")
                best[y] = x
                best_level[y] = lx

        for a, b in stream.scan():
            ca = comp[a]
            if ca < 0 or ca != comp[b]:
                continue
            c = live[ca]
            if c.state == SPLITTING:
                feed(c, a, b)
                continue
            par = c.tree.parent
            if par.get(a) == b or par.get(b) == a:
                continue
            key = (a, b) if a < b else (b, a)
            if key in c.buffer:
                continue
            if len(c.buffer) < c.cap:
                c.buffer[key] = None
                meter.charge(1, "kpath buffer")
            else:
                split(c)
                feed(c, a, b)

        nxt: list[_Component] = []
        for c in live:
            if c.state == BUFFERING:
                tree_edges = [(v, p) for v, p in c.tree.parent.items() if p != NO_PARENT]
                aux = dfs_local_tree(c.root, tree_edges + list(c.buffer))
                attach_component_to_T(T, c.root, c.attach, aux.parent, aux.bfs_order())
                meter.release(len(tree_edges) + len(c.buffer), "kpath component done")
                for v in c.vertices:
                    comp[v] = -1
                continue
            rest = [v for v in c.vertices if not in_tree[v]]
            for v in c.path:
                comp[v] = -1
            groups = {}
            for v in rest:
                groups.setdefault(split_dsu.find(v), []).append(v)
            edges_of: dict[int, list[tuple[int, int]]] = {}
            for a, b in c.forest:
                edges_of.setdefault(split_dsu.find(a), []).append((a, b))
            for r in sorted(groups, key=lambda r: groups[r][0]):
                vs = groups[r]
                y = vs[0]
                for v in vs:
                    if best_level[v] > best_level[y]:
                        y = v
                if best[y] == NO_PARENT:
                    raise RuntimeError(f"child component of {y} has no edge to the committed path")
                nxt.append(_Component(vs, y, best[y], LocalTree.from_edges(y, edges_of.get(r, [])), k))
            meter.release(sum(1 for v in rest if best[v] != NO_PARENT), "kpath pass end")
        live = nxt
    return run.finish(min_path_edges=min(path_drops) if path_drops else None, splits=len(path_drops))
