"""Rooted trees over dense vertex ids and the DFS-validity check."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, TextIO

NO_PARENT = -1


class TreeError(Exception):
    pass


class AttachError(TreeError, ValueError):
    pass


class NotSpanningError(TreeError):
    """The tree does not cover every vertex of the graph being validated."""


class TreeFormatError(TreeError, ValueError):
    pass


class DfsTree:
    """Array-backed rooted tree that only grows (the output tree T)."""

    def __init__(self, n: int, root: int = 0):
        self.n = n
        self.root = root
        self.parent = [NO_PARENT] * n
        self.level = [0] * n
        self.children: list[list[int]] = [[] for _ in range(n)]
        self.in_tree = bytearray(n)
        self.in_tree[root] = 1
        self.size = 1
        self.height = 0
        self._tour: Optional[tuple[list[int], list[int]]] = None

    def attach(self, child: int, parent: int) -> None:
        if not self.in_tree[parent]:
            raise AttachError(f"parent {parent} is not in the tree")
        if self.in_tree[child]:
            raise AttachError(f"vertex {child} is already in the tree")
        self.parent[child] = parent
        lev = self.level[parent] + 1
        self.level[child] = lev
        self.children[parent].append(child)
        self.in_tree[child] = 1
        self.size += 1
        if lev > self.height:
            self.height = lev
        self._tour = None

    def vertices(self) -> Iterator[int]:
        return (v for v in range(self.n) if self.in_tree[v])

    def children_of(self, v: int) -> list[int]:
        return self.children[v]

    def is_spanning(self) -> bool:
        return self.size == self.n

    def euler_intervals(self) -> tuple[list[int], list[int]]:
        """Entry/exit times of an iterative traversal; cached until the next attach."""
        if self._tour is None:
            tin = [-1] * self.n
            tout = [-1] * self.n
            clock = 0
            stack = [(self.root, 0)]
            children = self.children
            while stack:
                v, i = stack.pop()
                if i == 0:
                    tin[v] = clock
                    clock += 1
                kids = children[v]
                if i < len(kids):
                    stack.append((v, i + 1))
                    stack.append((kids[i], 0))
                else:
                    tout[v] = clock
                    clock += 1
            self._tour = (tin, tout)
        return self._tour

    def is_ancestor(self, a: int, d: int) -> bool:
        """True iff ``a`` lies on the root path of ``d`` (``a == d`` counts)."""
        tin, tout = self.euler_intervals()
        return tin[a] <= tin[d] and tout[d] <= tout[a]

    def root_path(self, v: int) -> list[int]:
        path = []
        while v != NO_PARENT:
            path.append(v)
            v = self.parent[v]
        path.reverse()
        return path


@dataclass
class LocalTree:
    """Dict-backed rooted tree over a subset of vertices (auxiliary and per-component trees)."""

    root: int
    parent: dict[int, int] = field(default_factory=dict)
    level: dict[int, int] = field(default_factory=dict)
    children: dict[int, list[int]] = field(default_factory=dict)

    def __post_init__(self):
        self.parent.setdefault(self.root, NO_PARENT)
        self.level.setdefault(self.root, 0)
        self.children.setdefault(self.root, [])

    def add(self, child: int, parent: int) -> None:
        self.parent[child] = parent
        self.level[child] = self.level[parent] + 1
        self.children.setdefault(child, [])
        self.children[parent].append(child)

    def vertices(self) -> Iterator[int]:
        return iter(self.parent)

    def children_of(self, v: int) -> list[int]:
        return self.children.get(v, [])

    def __len__(self) -> int:
        return len(self.parent)

    @classmethod
    def from_edges(cls, root: int, edges: Iterable[tuple[int, int]]) -> "LocalTree":
        """Root an (undirected, acyclic, connected) edge set at ``root``."""
        adj: dict[int, list[int]] = {root: []}
        for u, v in edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        t = cls(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in t.parent:
                    t.add(w, u)
                    queue.append(w)
        return t

    def bfs_order(self) -> list[int]:
        order = [self.root]
        for u in order:
            order.extend(self.children_of(u))
        return order


def attach(t: DfsTree, child: int, parent: int) -> DfsTree:
    t.attach(child, parent)
    return t


def is_ancestor(t: DfsTree, a: int, d: int) -> bool:
    return t.is_ancestor(a, d)


def validate_dfs(edges: Iterable[tuple[int, int]], t: DfsTree) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check that every edge is a tree edge or joins an ancestor/descendant pair.

    ``edges`` must include the dummy-root edges.  Raises
    :class:`NotSpanningError` when the tree misses a vertex, which is a
    different failure from an invalid (cross-edge carrying) tree.
    """
    if not t.is_spanning():
        missing = next(v for v in range(t.n) if not t.in_tree[v])
        raise NotSpanningError(f"tree covers {t.size} of {t.n} vertices (vertex {missing} missing)")
    tin, tout = t.euler_intervals()
    for u, v in edges:
        if u == v:
            continue
        if tin[u] > tin[v]:
            u, v = v, u
        if tout[v] > tout[u]:
            return False, (u, v)
    return True, None


def longest_root_path(t) -> list[int]:
    """Root-to-deepest path; among deepest vertices the smallest id wins."""
    level = t.level
    best = t.root
    for v in t.vertices():
        if level[v] > level[best] or (level[v] == level[best] and v < best):
            best = v
    path = []
    while best != NO_PARENT:
        path.append(best)
        best = t.parent[best]
    path.reverse()
    return path


def top_k_levels(t, k: int) -> tuple[set[int], list[tuple[int, int]]]:
    """Split a tree into its levels ``0..k-1`` and the subtrees hanging below them.

    Returns the vertex set of the top part and ``(root, parent)`` for each
    hanging subtree, where ``root`` sits at level ``k``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    top: set[int] = set()
    hanging: list[tuple[int, int]] = []
    stack = [t.root]
    while stack:
        u = stack.pop()
        top.add(u)
        for c in t.children_of(u):
            if t.level[c] < k:
                stack.append(c)
            else:
                hanging.append((c, u))
    hanging.sort()
    return top, hanging


def subtree_vertices(t, root: int) -> list[int]:
    out = [root]
    for u in out:
        out.extend(t.children_of(u))
    return out


def write_tree(t: DfsTree, fh: TextIO) -> None:
    """One line per vertex: ``v parent level``; the root has parent -1."""
    for v in t.vertices():
        fh.write(f"{v} {t.parent[v]} {t.level[v]}\n")


def read_tree(text: str, n: Optional[int] = None) -> DfsTree:
    """Parse the ``v parent level`` format back into a :class:`DfsTree`.

    Parent cycles, several roots and stated levels that disagree with the
    parent pointers are format errors.
    """
    parent_of: dict[int, int] = {}
    stated: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s[0] in "#%":
            continue
        parts = s.split()
        if len(parts) != 3:
            raise TreeFormatError(f"line {lineno}: expected 'v parent level': {s!r}")
        try:
            v, p, lev = (int(x) for x in parts)
        except ValueError:
            raise TreeFormatError(f"line {lineno}: non-integer field: {s!r}") from None
        if v in parent_of:
            raise TreeFormatError(f"line {lineno}: vertex {v} listed twice")
        parent_of[v] = p
        stated[v] = lev
    roots = [v for v, p in parent_of.items() if p == NO_PARENT]
    if len(roots) != 1:
        raise TreeFormatError(f"expected exactly one root, found {len(roots)}")
    size = max(parent_of) + 1 if n is None else n
    if any(v >= size or p >= size for v, p in parent_of.items()):
        raise TreeFormatError("vertex id out of range")
    kids: dict[int, list[int]] = {}
    for v, p in parent_of.items():
        if p != NO_PARENT:
            if p not in parent_of:
                raise TreeFormatError(f"vertex {v} has unknown parent {p}")
            kids.setdefault(p, []).append(v)
    t = DfsTree(size, roots[0])
    queue = deque([roots[0]])
    while queue:
        u = queue.popleft()
        for c in sorted(kids.get(u, ())):
            t.attach(c, u)
            queue.append(c)
    if t.size != len(parent_of):
        raise TreeFormatError("parent pointers contain a cycle")
    for v, lev in stated.items():
        if t.level[v] != lev:
            raise TreeFormatError(f"vertex {v}: stated level {lev} but parent chain gives {t.level[v]}")
    return t
