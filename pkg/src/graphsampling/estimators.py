"""scikit-learn style wrappers so samplers and property extraction compose in pipelines.

>>> from sklearn.pipeline import make_pipeline
>>> pipe = make_pipeline(EdgeSampler("TIWES", fraction=0.1, random_state=0),
...                      GraphProperties(n_sources=None))
>>> pipe.fit_transform(graph)          # doctest: +SKIP
array([[avg_degree, avg_clustering, avg_path_length]])
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError
from sklearn.utils.validation import check_is_fitted

from .graph import Graph
from .metrics import auto_path_length_stats, average_degree, clustering, path_length_stats
from .samplers import METHODS, sample
from .validation import check_fraction, check_graph

__all__ = ["EdgeSampler", "GraphProperties"]


class EdgeSampler(TransformerMixin, BaseEstimator):
    """Draw one ES/WES/TIES/TIWES sample from a graph.

    Parameters
    ----------
    method : {"ES", "WES", "TIES", "TIWES"}
    fraction : float in (0, 1]
        Target share of nodes in the sample.
    random_state : int, numpy Generator or None

    Attributes
    ----------
    sample_ : Sample
    n_nodes_in_ : int
    graph_hash_ : str
        Content hash of the fitted graph; ``transform`` refuses other graphs.
    """

    def __init__(self, method="WES", fraction=0.06, random_state=None):
        self.method = method
        self.fraction = fraction
        self.random_state = random_state

    def fit(self, X, y=None):
        g = check_graph(X, min_edges=1)
        if str(self.method).upper() not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        check_fraction(self.fraction, "fraction")
        self.sample_ = sample(g, self.method, self.fraction, self.random_state)
        self.n_nodes_in_ = g.node_count
        self.graph_hash_ = g.content_hash()
        return self

    def transform(self, X):
        check_is_fitted(self, "sample_")
        g = check_graph(X)
        if g.content_hash() != self.graph_hash_:
            raise ValueError("transform must be called on the graph the sampler was fitted on")
        return self.sample_.to_graph(g)

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y).transform(X)


class GraphProperties(TransformerMixin, BaseEstimator):
    """Map graphs to rows of ``[average_degree, average_clustering, average_path_length]``.

    ``n_sources="auto"`` runs exact BFS up to 20,000 nodes and 256 sampled
    sources above that; ``None`` forces exact; an int fixes the source count.
    """

    feature_names = ("average_degree", "average_clustering", "average_path_length")

    def __init__(self, n_sources="auto", random_state=None):
        self.n_sources = n_sources
        self.random_state = random_state

    def fit(self, X, y=None):
        self._graphs(X)
        self.n_features_out_ = 3
        return self

    def transform(self, X):
        if not hasattr(self, "n_features_out_"):
            raise NotFittedError("GraphProperties is not fitted yet")
        rows = []
        for g in self._graphs(X):
            if self.n_sources == "auto":
                apl = auto_path_length_stats(g, self.random_state)[0]
            else:
                apl = path_length_stats(g, self.n_sources, self.random_state)[0]
            rows.append([average_degree(g), clustering(g)[1], apl])
        return np.asarray(rows, dtype=np.float64)

    def get_feature_names_out(self, input_features=None):
        return np.asarray(self.feature_names, dtype=object)

    @staticmethod
    def _graphs(X):
        graphs = [X] if isinstance(X, Graph) else list(X)
        for g in graphs:
            check_graph(g, min_nodes=2)
        return graphs
