"""Union-find over dense vertex ids, with an activity mask.

Only active vertices take part; the streaming algorithms activate the
unvisited vertices of a pass and leave committed ones inactive.
"""
from __future__ import annotations

from typing import Iterable


class InactiveVertexError(KeyError):
    pass


class DisjointSet:
    """Union by rank with full path compression."""

    def __init__(self, n: int, active: bool = True):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.active = bytearray([1 if active else 0]) * n

    def activate(self, vertices: Iterable[int]) -> None:
        parent, rank, active = self.parent, self.rank, self.active
        for v in vertices:
            parent[v] = v
            rank[v] = 0
            active[v] = 1

    def deactivate(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            self.active[v] = 0

    def find(self, x: int) -> int:
        if not self.active[x]:
            raise InactiveVertexError(x)
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        rank = self.rank
        if rank[rx] < rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if rank[rx] == rank[ry]:
            rank[rx] += 1
        return True


def dsu_find(s: DisjointSet, x: int) -> int:
    return s.find(x)


def dsu_union(s: DisjointSet, x: int, y: int) -> bool:
    return s.union(x, y)


def components_and_spanning_forest(
    edges: Iterable[tuple[int, int]],
    active: Iterable[int],
    n: int,
) -> tuple[dict[int, int], list[tuple[int, int]]]:
    """Label every active vertex with its DSU root and collect a spanning forest.

    Edges with an inactive endpoint are ignored.  The forest is unrooted: it
    is the list of edges whose union merged two sets, in stream order.
    """
    s = DisjointSet(n, active=False)
    vs = list(active)
    s.activate(vs)
    act = s.active
    forest = []
    for u, v in edges:
        if act[u] and act[v] and s.union(u, v):
            forest.append((u, v))
    return {v: s.find(v) for v in vs}, forest
