"""Semi-streaming access model: graph inputs, edge streams, pass and space metering.

Vertex ids are dense integers.  Id 0 is always the dummy root that gets an
edge to every real vertex, so every input is effectively connected.  Real
vertices occupy ids ``1..n_original``.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

log = logging.getLogger(__name__)

ROOT = 0

Edge = tuple[int, int]


class StreamError(Exception):
    """Base class for errors raised by the stream layer."""


class EdgeListParseError(StreamError, ValueError):
    def __init__(self, lineno: int, line: str, reason: str = "expected two integer labels"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")


class EmptyGraphError(StreamError, ValueError):
    pass


class BudgetExceeded(StreamError, RuntimeError):
    """Stored edges went over the semi-streaming budget."""

    def __init__(self, site: str, current: int, budget: int):
        self.site = site
        self.current = current
        self.budget = budget
        super().__init__(f"space budget exceeded at {site}: {current} stored edges > budget {budget}")


@dataclass
class GraphInput:
    """An undirected graph before augmentation.

    ``edges`` already use dense ids in ``1..n_original``; their order is the
    stream order and never changes.
    """

    n_original: int
    edges: list[Edge]
    name: str = "graph"
    source: str = "file"
    labels: Optional[list[int]] = None  # labels[i - 1] is the file label of dense id i

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def n_aug(self) -> int:
        return self.n_original + 1


def ingest_edge_list(text: bytes | str, name: str = "graph") -> GraphInput:
    """Parse a whitespace separated edge list (KONECT / SNAP style).

    Lines starting with ``%`` or ``#`` are comments.  Extra columns after
    the two endpoint labels (weights, timestamps) are ignored.  Labels are
    remapped to ``1..n`` in ascending label order.  Self-loops are dropped,
    duplicate edges are kept.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    raw: list[Edge] = []
    labels: set[int] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped[0] in "%#":
            continue
        parts = stripped.split()
        if len(parts) < 2:
            raise EdgeListParseError(lineno, line)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, line) from None
        if a < 0 or b < 0:
            raise EdgeListParseError(lineno, line, "negative vertex label")
        labels.add(a)
        labels.add(b)
        if a != b:
            raw.append((a, b))
    if not labels:
        raise EmptyGraphError(f"{name}: no vertices found")
    ordered = sorted(labels)
    dense = {lab: i for i, lab in enumerate(ordered, start=1)}
    edges = [(dense[a], dense[b]) for a, b in raw]
    return GraphInput(len(ordered), edges, name=name, source="file", labels=ordered)


def _unrank_pairs(idx: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    # lexicographic order of pairs (a, b), 0 <= a < b < n
    row_start = np.cumsum(np.concatenate(([0], np.arange(n - 1, 0, -1, dtype=np.int64))))
    a = np.searchsorted(row_start, idx, side="right") - 1
    b = idx - row_start[a] + a + 1
    return a, b


def random_graph(n: int, m: int, seed: int) -> GraphInput:
    """G(n, m): the first ``m`` edges of a seeded uniform permutation of all pairs.

    The generator is numpy's PCG64 seeded with ``seed``.  The permutation is a
    partial Fisher-Yates shuffle over the pair index space ``[0, n(n-1)/2)``,
    where swapped slots live in a dict so nothing of size n^2 is allocated.
    Pair indices are unranked in lexicographic order and shifted to ids 1..n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"m={m} outside [0, {total}] for n={n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.integers(np.arange(m, dtype=np.int64), total) if m else np.empty(0, np.int64)
    swapped: dict[int, int] = {}
    chosen = np.empty(m, dtype=np.int64)
    for i, j in enumerate(draws.tolist()):
        vi = swapped.get(i, i)
        vj = swapped.get(j, j)
        chosen[i] = vj
        swapped[j] = vi
    a, b = _unrank_pairs(chosen, n)
    edges = list(zip((a + 1).tolist(), (b + 1).tolist()))
    return GraphInput(n, edges, name=f"gnm-{n}-{m}-{seed}", source=f"random({n},{m},{seed})")


def default_edge_count(n: int, log_base: float = math.e) -> int:
    """Edge count m = ceil(n log n) used by the sweeps."""
    return min(math.ceil(n * math.log(n, log_base)), n * (n - 1) // 2) if n > 1 else 0


class EdgeStream:
    """Replayable, order-stable stream over the augmented edge list.

    Every call to :meth:`scan` or :meth:`scan_arrays` starts a new pass.  An
    abandoned scan still counts as a pass.
    """

    def __init__(self, graph: GraphInput):
        self.graph = graph
        self.n = graph.n_aug
        dummy = [(ROOT, v) for v in range(1, graph.n_original + 1)]
        self._edges: list[Edge] = dummy + list(graph.edges)
        self._arrays: Optional[tuple[np.ndarray, np.ndarray]] = None
        self.passes = 0
        self.edges_scanned = 0

    def __len__(self) -> int:
        return len(self._edges)

    def reset_counters(self) -> None:
        self.passes = 0
        self.edges_scanned = 0

    def scan(self) -> Iterator[Edge]:
        self.passes += 1
        log.debug("pass %d begins", self.passes)
        return self._iter()

    def _iter(self) -> Iterator[Edge]:
        seen = 0
        try:
            for e in self._edges:
                seen += 1
                yield e
        finally:
            self.edges_scanned += seen

    def scan_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """One full pass, handed over as endpoint arrays for vectorised processing."""
        self.passes += 1
        self.edges_scanned += len(self._edges)
        if self._arrays is None:
            arr = np.array(self._edges, dtype=np.int64).reshape(-1, 2)
            self._arrays = (arr[:, 0].copy(), arr[:, 1].copy())
        return self._arrays

    def edges(self) -> list[Edge]:
        """Offline copy of the stream for validators and tests; not a pass."""
        return list(self._edges)


def augment_with_root(graph: GraphInput) -> EdgeStream:
    return EdgeStream(graph)


@dataclass
class SpaceMeter:
    """Counts stored edges against a budget.

    With ``enforce`` set a violation raises :class:`BudgetExceeded`, otherwise
    it is logged once and recorded in ``violations``.
    """

    budget_edges: int
    enforce: bool = True
    current: int = 0
    peak: int = 0
    violations: int = 0

    @classmethod
    def for_graph(cls, n: int, k: int, multiplier: float = 1.0, extra: int = 0, enforce: bool = True) -> "SpaceMeter":
        return cls(int(math.floor(multiplier * n * k)) + extra, enforce=enforce)

    def charge(self, delta: int, site: str = "?") -> None:
        cur = self.current + delta
        if cur < 0:
            raise ValueError(f"negative stored-edge count at {site}: {cur}")
        self.current = cur
        if cur > self.peak:
            self.peak = cur
        if cur > self.budget_edges:
            if self.enforce:
                raise BudgetExceeded(site, cur, self.budget_edges)
            if not self.violations:
                log.warning("space budget exceeded at %s: %d > %d", site, cur, self.budget_edges)
            self.violations += 1

    def release(self, delta: int, site: str = "?") -> None:
        self.charge(-delta, site)


def meter_charge(meter: SpaceMeter, delta: int, site: str = "?") -> SpaceMeter:
    meter.charge(delta, site)
    return meter


@dataclass
class PassStats:
    passes: int = 0
    edges_scanned: int = 0
    peak_stored_edges: int = 0
    tree_height: int = 0
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)
