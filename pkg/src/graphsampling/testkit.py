"""Deterministic synthetic graphs for tests and small experiments."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

__all__ = ["GraphSpec", "make_graph", "KINDS"]

KINDS = ("complete", "path", "star", "cycle", "erdos_renyi")


@dataclass(frozen=True)
class GraphSpec:
    kind: str
    n: int
    p: float = 0.0
    seed: int = 0

    def __post_init__(self):
        kind = {"er": "erdos_renyi", "gnp": "erdos_renyi"}.get(self.kind, self.kind)
        object.__setattr__(self, "kind", kind)
        if kind not in KINDS:
            raise ValueError(f"unknown graph kind {self.kind!r}; expected one of {KINDS}")
        if int(self.n) != self.n or self.n < 1:
            raise ValueError("n must be a positive integer")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        if kind == "cycle" and self.n < 3:
            raise ValueError("a simple cycle needs n >= 3")


def make_graph(spec: GraphSpec) -> Graph:
    """Build the graph described by ``spec``.

    ``star`` has centre 0 and leaves ``1 .. n-1``. ``erdos_renyi`` walks the
    pairs ``(i, j), i < j`` in row-major order and keeps each one when its own
    uniform draw from ``default_rng(seed)`` falls below ``p``.
    """
    n = int(spec.n)
    if spec.kind == "complete":
        i, j = np.triu_indices(n, k=1)
        edges = np.column_stack([i, j])
    elif spec.kind == "path":
        edges = np.column_stack([np.arange(n - 1), np.arange(1, n)])
    elif spec.kind == "star":
        edges = np.column_stack([np.zeros(n - 1, dtype=np.int64), np.arange(1, n)])
    elif spec.kind == "cycle":
        edges = np.column_stack([np.arange(n), (np.arange(n) + 1) % n])
    else:
        i, j = np.triu_indices(n, k=1)
        draws = np.random.default_rng(spec.seed).random(i.size)
        keep = draws < spec.p
        edges = np.column_stack([i[keep], j[keep]])
    return Graph(n, edges)
