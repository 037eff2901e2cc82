"""Edge-based graph samplers: ES, WES and their totally induced variants.

ES draws edges uniformly without replacement. WES starts every edge at
weight 1, draws edges with probability proportional to weight, zeroes the
drawn edge and adds one to each still-unsampled edge sharing an endpoint with
it. Both stop once the node target ``ceil(phi * |V|)`` is reached. TIES and
TIWES keep the sampled node set and replace the edge set by every original
edge between sampled nodes.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .exceptions import GraphError
from .graph import Graph
from .validation import check_fraction, check_graph, check_rng
from .weight_index import WeightIndex

__all__ = [
    "METHODS",
    "Sample",
    "es_sample",
    "wes_sample",
    "totally_induce",
    "sample",
    "node_target",
]

METHODS = ("ES", "TIES", "WES", "TIWES")
_INDUCED = {"ES": "TIES", "WES": "TIWES", "TIES": "TIES", "TIWES": "TIWES"}
_BASE = {"ES": "ES", "TIES": "ES", "WES": "WES", "TIWES": "WES"}


class SamplingExhaustedWarning(RuntimeWarning):
    pass


@dataclass(frozen=True, eq=False)
class Sample:
    """Node and edge ids drawn from a parent :class:`Graph`.

    ``node_ids`` and ``edge_ids`` are sorted, duplicate-free int64 arrays.
    ``n_draws`` is the number of edge draws made by the sampler (equal to
    ``len(edge_ids)`` before induction). ``exhausted`` is set when every edge
    was used before the node target was reached.
    """

    node_ids: np.ndarray
    edge_ids: np.ndarray
    method: str
    phi: float
    seed: int | None = None
    n_draws: int = 0
    exhausted: bool = False

    @property
    def n_nodes(self) -> int:
        return int(self.node_ids.size)

    @property
    def n_edges(self) -> int:
        return int(self.edge_ids.size)

    def to_graph(self, g: Graph) -> Graph:
        """Materialise the sample as a graph relabelled to dense ids."""
        return g.edge_subgraph(self.node_ids, self.edge_ids)

    def __eq__(self, other):
        if not isinstance(other, Sample):
            return NotImplemented
        return (
            np.array_equal(self.node_ids, other.node_ids)
            and np.array_equal(self.edge_ids, other.edge_ids)
            and (self.method, self.phi, self.seed, self.n_draws, self.exhausted)
            == (other.method, other.phi, other.seed, other.n_draws, other.exhausted)
        )

    __hash__ = None


def node_target(phi: float, n: int) -> int:
    """``ceil(phi * n)`` evaluated on the decimal value of ``phi``.

    Going through the shortest repr avoids ``ceil(0.1 * 100) == 11``.
    """
    return math.ceil(Fraction(repr(float(phi))) * n)


def _edge_sampling(g, phi, rng, *, weighted, on_step=None):
    target = node_target(phi, g.node_count)
    edges = g.edges
    indptr, adj_e = g.indptr, g.adjacency_edges
    index = WeightIndex(np.ones(g.edge_count, dtype=np.int64))
    in_sample = np.zeros(g.node_count, dtype=bool)
    count = 0
    drawn = []
    exhausted = False
    while count < target:
        if index.total == 0:
            exhausted = True
            break
        e = index.draw(rng.random())
        drawn.append(e)
        u = int(edges[e, 0])
        v = int(edges[e, 1])
        if not in_sample[u]:
            in_sample[u] = True
            count += 1
        if not in_sample[v]:
            in_sample[v] = True
            count += 1
        index.zero(e)
        if weighted:
            nb = np.concatenate([adj_e[indptr[u]:indptr[u + 1]],
                                 adj_e[indptr[v]:indptr[v + 1]]])
            # sampled edges, including e itself, stay at zero
            nb = nb[index.weights[nb] > 0]
            index.add_many(nb, 1)
        if on_step is not None:
            on_step(e, index)
    nodes = np.flatnonzero(in_sample)
    return nodes, np.sort(np.asarray(drawn, dtype=np.int64)), len(drawn), exhausted, index


def _run(g, phi, random_state, weighted, on_step):
    g = check_graph(g, min_edges=1)
    phi = check_fraction(phi)
    rng, seed = check_rng(random_state)
    nodes, edge_ids, n_draws, exhausted, index = _edge_sampling(
        g, phi, rng, weighted=weighted, on_step=on_step)
    if exhausted:
        warnings.warn(
            f"graph exhausted after {n_draws} edges with {nodes.size} nodes "
            f"(target {node_target(phi, g.node_count)})",
            SamplingExhaustedWarning, stacklevel=3)
    s = Sample(nodes, edge_ids, "WES" if weighted else "ES", float(phi), seed,
               n_draws, exhausted)
    return s, index


def es_sample(g: Graph, phi: float, random_state=None, *, on_step=None) -> Sample:
    """Uniform edge sampling without replacement until ``ceil(phi |V|)`` nodes.

    ``random_state`` may be an int seed, a ``numpy.random.Generator`` or any
    object with a ``random()`` method returning floats in ``[0, 1)``.
    ``on_step(edge_id, index)`` is called after every draw.
    """
    return _run(g, phi, random_state, False, on_step)[0]


def wes_sample(g: Graph, phi: float, random_state=None, *, on_step=None) -> Sample:
    """Weighted edge sampling; see the module docstring for the update rule."""
    return _run(g, phi, random_state, True, on_step)[0]


def totally_induce(g: Graph, s: Sample) -> Sample:
    """Replace the sample's edges by all edges of ``g`` between its nodes."""
    nodes = np.asarray(s.node_ids, dtype=np.int64)
    if nodes.size and (nodes.min() < 0 or nodes.max() >= g.node_count):
        raise GraphError("sample node ids do not belong to this graph")
    mask = np.zeros(g.node_count, dtype=bool)
    mask[nodes] = True
    edge_ids = np.flatnonzero(mask[g.edges[:, 0]] & mask[g.edges[:, 1]]).astype(np.int64)
    return replace(s, edge_ids=edge_ids, method=_INDUCED.get(s.method, s.method))


def sample(g: Graph, method: str, phi: float, random_state=None) -> Sample:
    """Run one of ``ES``, ``WES``, ``TIES``, ``TIWES``."""
    method = method.upper()
    if method not in _BASE:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    base = es_sample if _BASE[method] == "ES" else wes_sample
    s = base(g, phi, random_state)
    return totally_induce(g, s) if method.startswith("TI") else s
