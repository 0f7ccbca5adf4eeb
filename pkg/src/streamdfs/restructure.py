"""Incremental DFS restructuring with monotonic fall.

:class:`SubgraphH` holds a rooted spanning forest (one tree ``T_C`` per live
component) together with the stored non-tree edges of ``H_C``.  Inserting a
cross edge reroots one subtree below the deeper endpoint by reversing a
single tree path.  Levels only ever increase, so no vertex can climb back
into the top levels of its tree.
"""
from __future__ import annotations

import logging
from collections import deque
from typing import Callable, Optional

from .stream import SpaceMeter
from .tree import NO_PARENT

log = logging.getLogger(__name__)

RehangCallback = Callable[[list[tuple[int, int]]], None]


class MonotonicFallViolation(AssertionError):
    pass


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


class SubgraphH:
    def __init__(self, n: int, meter: Optional[SpaceMeter] = None, check: bool = False):
        self.n = n
        self.parent = [NO_PARENT] * n
        self.level = [0] * n
        self.children: list[set[int]] = [set() for _ in range(n)]
        self.nontree: dict[int, set[int]] = {}
        self.meter = meter
        self.check = check
        self.reversals = 0

    # -- tree setup -------------------------------------------------------

    def load_tree(self, root: int, parent: dict[int, int], order: list[int], charge: bool = True) -> None:
        """Install a rooted tree given parent pointers and a parents-first order."""
        P, L, C = self.parent, self.level, self.children
        P[root] = NO_PARENT
        L[root] = 0
        C[root] = set()
        for v in order:
            if v == root:
                continue
            p = parent[v]
            P[v] = p
            L[v] = L[p] + 1
            C[v] = set()
            C[p].add(v)
        if charge and self.meter is not None:
            self.meter.charge(len(order) - 1, "load spanning tree")

    def is_tree_edge(self, a: int, b: int) -> bool:
        return self.parent[a] == b or self.parent[b] == a

    def has_nontree(self, a: int, b: int) -> bool:
        s = self.nontree.get(a)
        return s is not None and b in s

    def add_nontree(self, a: int, b: int, site: str = "store edge") -> None:
        self.nontree.setdefault(a, set()).add(b)
        self.nontree.setdefault(b, set()).add(a)
        if self.meter is not None:
            self.meter.charge(1, site)

    def remove_nontree(self, a: int, b: int, site: str = "evict edge") -> None:
        self.nontree[a].discard(b)
        self.nontree[b].discard(a)
        if self.meter is not None:
            self.meter.release(1, site)

    def _swap_nontree(self, a: int, b: int) -> None:
        # uncharged: one edge changes role from non-tree to tree or back
        s = self.nontree.setdefault(a, set())
        if b in s:
            s.discard(b)
            self.nontree[b].discard(a)
        else:
            s.add(b)
            self.nontree.setdefault(b, set()).add(a)

    def drop_nontree(self, vertices) -> int:
        """Forget all stored non-tree edges touching ``vertices``; returns how many."""
        dropped = 0
        for v in vertices:
            s = self.nontree.pop(v, None)
            if not s:
                continue
            for u in s:
                other = self.nontree.get(u)
                if other is not None and v in other:
                    other.discard(v)
                    dropped += 1
        if self.meter is not None and dropped:
            self.meter.release(dropped, "reset H")
        return dropped

    # -- ancestry -----------------------------------------------------------

    def is_ancestor(self, a: int, d: int) -> bool:
        """Parent walking bounded by the level difference."""
        level, parent = self.level, self.parent
        la = level[a]
        while level[d] > la:
            d = parent[d]
        return d == a

    def related(self, a: int, b: int) -> bool:
        if self.level[a] <= self.level[b]:
            return self.is_ancestor(a, b)
        return self.is_ancestor(b, a)

    def find_path_vertex_v(self, x: int, y: int) -> Optional[tuple[int, int]]:
        """LCA ``w`` of a cross edge and the child ``v`` of ``w`` above the shallower end.

        Returns None when the edge is a back edge.
        """
        level, parent = self.level, self.parent
        a, b = (x, y) if level[x] >= level[y] else (y, x)
        lb = level[b]
        while level[a] > lb:
            a = parent[a]
        if a == b:
            return None
        while parent[a] != parent[b]:
            a = parent[a]
            b = parent[b]
        w = parent[a]
        if w == NO_PARENT:
            raise ValueError(f"edge ({x}, {y}) joins two different trees")
        return w, b

    # -- restructuring -----------------------------------------------------------

    def reverse(self, x: int, y: int) -> Optional[tuple[list[int], dict[int, int], list[tuple[int, int]]]]:
        """Hang the subtree containing ``y`` from ``x`` by reversing the path y..v.

        Requires ``level[x] >= level[y]``.  Returns None for a back edge,
        otherwise ``(path, label, moved)``: the reversed path from ``y`` up to
        ``v``, the path index whose off-path subtree holds each moved vertex,
        and ``(vertex, old_level)`` for every moved vertex in parents-first
        order.
        """
        if self.level[x] < self.level[y]:
            x, y = y, x
        wv = self.find_path_vertex_v(x, y)
        if wv is None:
            return None
        w, v = wv
        parent, children, level = self.parent, self.children, self.level
        path = [y]
        while path[-1] != v:
            path.append(parent[path[-1]])
        children[w].discard(v)
        self._swap_nontree(w, v)
        for i in range(len(path) - 1):
            c, p = path[i], path[i + 1]
            children[p].discard(c)
            children[c].add(p)
            parent[p] = c
        parent[y] = x
        children[x].add(y)
        self._swap_nontree(x, y)

        on_path = {u: i for i, u in enumerate(path)}
        label = {y: 0}
        moved = [(y, level[y])]
        level[y] = level[x] + 1
        queue = deque([y])
        while queue:
            u = queue.popleft()
            lu = level[u] + 1
            iu = label[u]
            for c in children[u]:
                moved.append((c, level[c]))
                level[c] = lu
                label[c] = on_path.get(c, iu)
                queue.append(c)
        self.reversals += 1
        if self.check:
            for u, old in moved:
                if level[u] <= old:
                    raise MonotonicFallViolation(f"vertex {u} rose or stayed: {old} -> {level[u]}")
        return path, label, moved

    def collect_new_cross_edges(self, path: list[int], label: dict[int, int]) -> list[tuple[int, int]]:
        """Stored non-tree edges that the last reversal turned into cross edges.

        Only edges from a path vertex ``path[j]`` into an off-path subtree
        hanging from a lower path index can have lost their ancestry.
        """
        out = []
        on_path = set(path)
        nontree = self.nontree
        for j in range(1, len(path)):
            pj = path[j]
            for s in nontree.get(pj, ()):
                if s in on_path:
                    continue
                ls = label.get(s)
                if ls is not None and ls < j:
                    out.append((pj, s))
        return out

    def maintain_dfs(self, x: int, y: int, on_rehang: Optional[RehangCallback] = None) -> int:
        """Restore the DFS property after the non-tree edge ``(x, y)`` was stored.

        The pool is processed LIFO.  Returns the number of path reversals.
        """
        level = self.level
        pool = [(x, y)]
        pooled = {_key(x, y)}
        done = 0
        while pool:
            a, b = pool.pop()
            pooled.discard(_key(a, b))
            if level[a] < level[b]:
                a, b = b, a
            res = self.reverse(a, b)
            if res is None:
                continue
            done += 1
            path, label, moved = res
            if on_rehang is not None:
                on_rehang(moved)
            for e in self.collect_new_cross_edges(path, label):
                k = _key(*e)
                if k not in pooled:
                    pooled.add(k)
                    pool.append(e)
        return done

    # -- checks -------------------------------------------------------------

    def first_cross_edge(self, vertices=None) -> Optional[tuple[int, int]]:
        """Full scan of stored non-tree edges; used by instrumented runs and tests."""
        items = self.nontree.items() if vertices is None else ((v, self.nontree.get(v, ())) for v in vertices)
        for a, nbrs in items:
            for b in nbrs:
                if a < b and not self.related(a, b):
                    return a, b
        return None


def maintain_dfs(h: SubgraphH, e: tuple[int, int], on_rehang: Optional[RehangCallback] = None) -> SubgraphH:
    """Module-level form: ``e`` must already be stored in ``h``."""
    h.maintain_dfs(e[0], e[1], on_rehang)
    return h
