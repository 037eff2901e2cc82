"""Input validation helpers shared by the samplers, estimators and metrics."""

from __future__ import annotations

import numbers

import numpy as np

from .exceptions import GraphError
from .graph import Graph


def check_graph(g, *, min_nodes=0, min_edges=0) -> Graph:
    if not isinstance(g, Graph):
        raise TypeError(f"expected a Graph, got {type(g).__name__}")
    if g.node_count < min_nodes:
        raise GraphError(f"graph needs at least {min_nodes} node(s), has {g.node_count}")
    if g.edge_count < min_edges:
        raise GraphError(f"graph needs at least {min_edges} edge(s), has {g.edge_count}")
    return g


def check_fraction(phi, name="phi") -> float:
    if isinstance(phi, bool) or not isinstance(phi, numbers.Real):
        raise TypeError(f"{name} must be a real number")
    phi = float(phi)
    if not 0.0 < phi <= 1.0:
        raise ValueError(f"{name} must lie in (0, 1], got {phi}")
    return phi


def check_rng(random_state):
    """Return ``(rng, seed)`` where ``rng.random()`` yields floats in [0, 1).

    Integer seeds feed numpy's PCG64, whose stream is identical across
    platforms. Generators and duck-typed objects pass through; ``seed`` is
    then whatever the object exposes as ``.seed`` (or ``None``).
    """
    if random_state is None:
        return np.random.default_rng(), None
    if isinstance(random_state, numbers.Integral) and not isinstance(random_state, bool):
        seed = int(random_state)
        if seed < 0:
            raise ValueError("seed must be non-negative")
        return np.random.default_rng(seed), seed
    if hasattr(random_state, "random"):
        seed = getattr(random_state, "seed", None)
        return random_state, seed if isinstance(seed, numbers.Integral) else None
    raise TypeError(f"cannot use {random_state!r} as a random state")
