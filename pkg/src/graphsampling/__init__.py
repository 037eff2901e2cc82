"""Edge sampling of large graphs: ES, WES, TIES and TIWES, with evaluation tools."""

from .estimators import EdgeSampler, GraphProperties
from .exceptions import (
    ConfigError,
    EdgeListParseError,
    EmptyGraphError,
    ExhaustedDistributionError,
    GraphError,
)
from .graph import Graph, LoadOptions, induced_subgraph, load_edge_list, neighboring_edges
from .metrics import HopHistogram, MetricsSummary, average_degree, clustering, path_length_stats
from .samplers import METHODS, Sample, es_sample, sample, totally_induce, wes_sample
from .stats import Ecdf, ecdf, ks_distance, mean_ci, rmse
from .testkit import GraphSpec, make_graph
from .weight_index import WeightIndex

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "Ecdf",
    "EdgeListParseError",
    "EdgeSampler",
    "EmptyGraphError",
    "ExhaustedDistributionError",
    "Graph",
    "GraphError",
    "GraphProperties",
    "GraphSpec",
    "HopHistogram",
    "LoadOptions",
    "METHODS",
    "MetricsSummary",
    "Sample",
    "WeightIndex",
    "average_degree",
    "clustering",
    "ecdf",
    "es_sample",
    "induced_subgraph",
    "ks_distance",
    "load_edge_list",
    "make_graph",
    "mean_ci",
    "neighboring_edges",
    "path_length_stats",
    "rmse",
    "sample",
    "totally_induce",
    "wes_sample",
]
