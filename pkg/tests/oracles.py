"""Slow, obviously-correct reference implementations used by the tests."""
from __future__ import annotations

import sys
from collections import deque

from streamdfs.tree import NO_PARENT, DfsTree


def bfs_components(n: int, edges, vertices=None) -> list[frozenset]:
    vs = set(range(n)) if vertices is None else set(vertices)
    adj = {v: [] for v in vs}
    for a, b in edges:
        if a in vs and b in vs:
            adj[a].append(b)
            adj[b].append(a)
    seen, out = set(), []
    for s in sorted(vs):
        if s in seen:
            continue
        comp = {s}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    q.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def walk_is_ancestor(parent, a: int, d: int) -> bool:
    while d != NO_PARENT:
        if d == a:
            return True
        d = parent[d]
    return False


def brute_validate(edges, parent) -> bool:
    for a, b in edges:
        if a != b and not (walk_is_ancestor(parent, a, b) or walk_is_ancestor(parent, b, a)):
            return False
    return True


def recursive_dfs_tree(n: int, edges, root: int = 0) -> DfsTree:
    """Textbook recursive DFS over an adjacency list."""
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    t = DfsTree(n, root)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * n + 100))

    def visit(u):
        for w in adj[u]:
            if not t.in_tree[w]:
                t.attach(w, u)
                visit(w)

    try:
        visit(root)
    finally:
        sys.setrecursionlimit(old)
    return t


def random_dfs_instance(rng, n: int, density: float = 0.15):
    """A random graph on ``0..n-1`` (vertex 0 adjacent to all), a random stored
    subset ``S`` containing the star, and a recursive DFS tree of ``S``.

    Returns ``(all_edges, stored, tree)``.
    """
    all_edges = [(0, v) for v in range(1, n)]
    for a in range(1, n):
        for b in range(a + 1, n):
            if rng.random() < density:
                all_edges.append((a, b))
    stored = [e for e in all_edges if e[0] == 0 or rng.random() < 0.5]
    rng.shuffle(stored)
    return all_edges, stored, recursive_dfs_tree(n, stored)


def load_h(h, tree: DfsTree, stored) -> None:
    order = [tree.root]
    for u in order:
        order.extend(tree.children[u])
    h.load_tree(tree.root, tree.parent, order)
    for a, b in stored:
        if tree.parent[a] != b and tree.parent[b] != a and not h.has_nontree(a, b):
            h.add_nontree(a, b)


def cross_edges(h) -> set:
    out = set()
    for a, nbrs in h.nontree.items():
        for b in nbrs:
            if a < b and not (walk_is_ancestor(h.parent, a, b) or walk_is_ancestor(h.parent, b, a)):
                out.add((a, b))
    return out


def tree_is_consistent(h, vertices) -> bool:
    """Parent pointers, children sets and levels agree and form one tree."""
    roots = [v for v in vertices if h.parent[v] == NO_PARENT]
    if len(roots) != 1:
        return False
    for v in vertices:
        p = h.parent[v]
        if p != NO_PARENT and (h.level[v] != h.level[p] + 1 or v not in h.children[p]):
            return False
        if any(h.parent[c] != v for c in h.children[v]):
            return False
    return all(walk_is_ancestor(h.parent, roots[0], v) for v in vertices)
