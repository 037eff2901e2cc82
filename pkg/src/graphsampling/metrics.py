"""Degree, clustering and hop-distance properties of a graph."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .exceptions import EmptyGraphError, GraphError
from .graph import Graph
from .validation import check_rng

__all__ = [
    "EXACT_PATH_LIMIT",
    "DEFAULT_PATH_SOURCES",
    "HopHistogram",
    "MetricsSummary",
    "average_degree",
    "triangles",
    "clustering",
    "path_length_stats",
    "auto_path_length_stats",
    "summarize",
]

EXACT_PATH_LIMIT = 20_000
DEFAULT_PATH_SOURCES = 256
_BFS_CHUNK_CELLS = 8_000_000


@dataclass
class HopHistogram:
    """Counts of ordered (source, target) pairs at each hop distance >= 1."""

    counts: dict = field(default_factory=dict)

    @property
    def reachable_pairs(self) -> int:
        return int(sum(self.counts.values()))

    @property
    def average(self) -> float:
        pairs = self.reachable_pairs
        if pairs == 0:
            return float("nan")
        return sum(d * c for d, c in self.counts.items()) / pairs

    def values_and_counts(self):
        d = np.array(sorted(self.counts), dtype=np.float64)
        c = np.array([self.counts[k] for k in sorted(self.counts)], dtype=np.int64)
        return d, c


@dataclass
class MetricsSummary:
    nodes: int
    edges: int
    average_degree: float
    average_clustering: float
    average_path_length: float
    path_length_mode: str

    def as_dict(self):
        return {
            "nodes": self.nodes,
            "edges": self.edges,
            "average_degree": self.average_degree,
            "average_clustering": self.average_clustering,
            "average_path_length": self.average_path_length,
            "path_length_mode": self.path_length_mode,
        }


def _require_nodes(g, k=1):
    if g.node_count < k:
        raise EmptyGraphError(f"graph must have at least {k} node(s)")


def average_degree(g: Graph) -> float:
    _require_nodes(g)
    return 2.0 * g.edge_count / g.node_count


def triangles(g: Graph) -> np.ndarray:
    """Number of triangles through each node."""
    a = g.to_sparse().astype(np.int64)
    # (A @ A)[u, v] counts common neighbours; masking by A keeps adjacent pairs
    paths = (a @ a).multiply(a)
    return np.asarray(paths.sum(axis=1)).ravel() // 2


def clustering(g: Graph):
    """Local clustering per node and its unweighted mean.

    Nodes of degree below two get coefficient 0 and still count towards the
    mean.
    """
    _require_nodes(g)
    deg = g.degrees().astype(np.float64)
    tri = triangles(g).astype(np.float64)
    possible = deg * (deg - 1.0) / 2.0
    local = np.zeros(g.node_count, dtype=np.float64)
    ok = possible > 0
    local[ok] = tri[ok] / possible[ok]
    return local, float(local.mean())


def _bfs_histogram(g, sources):
    a = g.to_sparse()
    n = g.node_count
    chunk = max(1, _BFS_CHUNK_CELLS // max(n, 1))
    total = np.zeros(1, dtype=np.int64)
    for start in range(0, len(sources), chunk):
        idx = sources[start:start + chunk]
        dist = shortest_path(a, method="D", directed=False, unweighted=True, indices=idx)
        finite = dist[np.isfinite(dist)]
        hops = finite[finite > 0].astype(np.int64)
        if hops.size:
            binned = np.bincount(hops)
            if binned.size > total.size:
                binned[:total.size] += total
                total = binned
            else:
                total[:binned.size] += binned
    return HopHistogram({int(d): int(c) for d, c in enumerate(total) if d > 0 and c > 0})


def path_length_stats(g: Graph, n_sources=None, random_state=None):
    """Average hop distance over reachable ordered pairs, with its histogram.

    With ``n_sources=None`` a BFS runs from every node. Otherwise BFS runs
    from ``n_sources`` distinct nodes chosen uniformly at random. Unreachable
    pairs are left out of both the average and the histogram.

    Returns
    -------
    (average, HopHistogram)
    """
    _require_nodes(g, 2)
    n = g.node_count
    if n_sources is None:
        sources = np.arange(n)
    else:
        k = int(n_sources)
        if k < 1 or k > n:
            raise GraphError(f"n_sources must lie in [1, {n}], got {k}")
        rng, _ = check_rng(random_state)
        if isinstance(rng, np.random.Generator):
            sources = np.sort(rng.choice(n, size=k, replace=False))
        else:
            sources = np.sort(np.argsort([rng.random() for _ in range(n)])[:k])
    hist = _bfs_histogram(g, sources)
    return hist.average, hist


def path_length_mode(g: Graph, exact_limit=EXACT_PATH_LIMIT, n_sources=DEFAULT_PATH_SOURCES):
    """``None`` (exact) for graphs up to ``exact_limit`` nodes, else a source count."""
    if g.node_count <= exact_limit:
        return None
    return min(n_sources, g.node_count)


def mode_label(n_sources) -> str:
    return "exact" if n_sources is None else f"sampled({n_sources})"


def auto_path_length_stats(g: Graph, random_state=None, exact_limit=EXACT_PATH_LIMIT,
                           n_sources=DEFAULT_PATH_SOURCES):
    """Exact BFS on small graphs, source sampling on large ones.

    Returns ``(average, HopHistogram, mode_label)``.
    """
    k = path_length_mode(g, exact_limit, n_sources)
    avg, hist = path_length_stats(g, k, random_state)
    return avg, hist, mode_label(k)


def summarize(g: Graph, n_sources="auto", random_state=None) -> MetricsSummary:
    """All three point statistics of ``g``.

    ``n_sources`` is ``"auto"``, ``None`` (exact) or a BFS source count.
    """
    if n_sources == "auto":
        apl, _, label = auto_path_length_stats(g, random_state)
    else:
        apl, _ = path_length_stats(g, n_sources, random_state)
        label = mode_label(n_sources)
    return MetricsSummary(
        nodes=g.node_count,
        edges=g.edge_count,
        average_degree=average_degree(g),
        average_clustering=clustering(g)[1],
        average_path_length=apl,
        path_length_mode=label,
    )
