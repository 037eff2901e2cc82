"""Experiment driver: point statistics across sampling fractions and
distribution comparisons at a single fraction.

Every (method, fraction, repetition) cell uses seed ``base_seed + repetition``.
TIES and TIWES reuse the node set drawn by ES and WES for the same seed, so
induced and non-induced results are paired.
"""

from __future__ import annotations

import csv
import json
import logging
import os
import re
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from .exceptions import ConfigError
from .graph import Graph, load_edge_list
from .metrics import (
    DEFAULT_PATH_SOURCES,
    auto_path_length_stats,
    average_degree,
    clustering,
    mode_label,
    path_length_stats,
)
from .samplers import METHODS, es_sample, node_target, totally_induce, wes_sample
from .stats import Ecdf, ecdf, ks_distance, mean_ci, rmse

__all__ = [
    "PROPERTIES",
    "ExperimentConfig",
    "PointStatsReport",
    "DistributionReport",
    "GraphProfile",
    "profile_graph",
    "run_point_statistics",
    "run_distributions",
    "load_config_file",
]

log = logging.getLogger(__name__)

PROPERTIES = ("degree", "clustering", "path_length")
DEFAULT_FRACTIONS = (0.02, 0.04, 0.06, 0.08, 0.10)

POINT_HEADER = ["dataset", "method", "property", "phi", "mean_ratio", "ci_low", "ci_high"]
RMSE_HEADER = ["dataset", "method", "property", "rmse"]
KS_HEADER = ["dataset", "method", "property", "ks_mean"]
ECDF_HEADER = ["x", "cum_prob"]

_PATH_STREAM = 0x5A17  # keeps BFS source choice off the sampler's random stream


@dataclass
class ExperimentConfig:
    dataset_path: str = ""
    methods: tuple = METHODS
    fractions: tuple = DEFAULT_FRACTIONS
    repetitions: int = 5
    base_seed: int = 0
    path_length_mode: str = "auto"
    output_dir: str = "results"
    output_format: str = "csv"
    dist_phi: float = 0.06
    dataset_name: str = ""

    def __post_init__(self):
        self.methods = tuple(_split(self.methods, str.upper))
        self.fractions = tuple(_split(self.fractions, float))
        try:
            self.repetitions = int(self.repetitions)
            self.base_seed = int(self.base_seed)
            self.dist_phi = float(self.dist_phi)
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from None
        self.path_length_mode = str(self.path_length_mode).strip().lower()
        self.output_format = str(self.output_format).strip().lower()
        self.validate()

    def validate(self):
        bad = [m for m in self.methods if m not in METHODS]
        if bad or not self.methods:
            raise ConfigError(f"methods must be a non-empty subset of {METHODS}, got {self.methods}")
        if not self.fractions or any(not 0.0 < f <= 1.0 for f in self.fractions):
            raise ConfigError(f"fractions must lie in (0, 1], got {self.fractions}")
        if not 0.0 < self.dist_phi <= 1.0:
            raise ConfigError(f"dist_phi must lie in (0, 1], got {self.dist_phi}")
        if self.repetitions < 1:
            raise ConfigError("repetitions must be >= 1")
        if self.base_seed < 0:
            raise ConfigError("base_seed must be non-negative")
        if self.output_format not in ("csv", "json"):
            raise ConfigError("output_format must be csv or json")
        parse_path_mode(self.path_length_mode)

    @property
    def name(self) -> str:
        if self.dataset_name:
            return self.dataset_name
        return Path(self.dataset_path).name.split(".")[0] or "graph"


def _split(value, conv):
    if isinstance(value, str):
        value = [v for v in re.split(r"[,\s]+", value) if v]
    try:
        return [conv(v) for v in value]
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from None


def parse_path_mode(mode):
    """``"auto"``, ``"exact"`` or ``"sampled(k)"`` / ``"sampled:k"`` / ``"sampled"``."""
    mode = str(mode).strip().lower()
    if mode in ("auto", "exact"):
        return mode
    m = re.fullmatch(r"sampled(?:[(:=](\d+)\)?)?", mode)
    if m:
        k = int(m.group(1)) if m.group(1) else DEFAULT_PATH_SOURCES
        if k < 1:
            raise ConfigError("sampled path-length mode needs k >= 1")
        return k
    raise ConfigError(f"path_length_mode must be auto, exact or sampled(k); got {mode!r}")


def load_config_file(path) -> dict:
    """Read a flat ``key = value`` file. Blank lines and ``#`` comments are ignored."""
    known = {f.name for f in fields(ExperimentConfig)}
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in known:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = value
    return out


# graph profiling


@dataclass
class GraphProfile:
    """Point statistics and distributions of one graph."""

    average_degree: float
    average_clustering: float
    average_path_length: float
    path_length_mode: str
    degrees: np.ndarray = field(repr=False)
    local_clustering: np.ndarray = field(repr=False)
    hops: object = field(repr=False)

    def point(self, prop):
        return {"degree": self.average_degree,
                "clustering": self.average_clustering,
                "path_length": self.average_path_length}[prop]

    def ecdf(self, prop) -> Ecdf:
        if prop == "degree":
            return ecdf(self.degrees)
        if prop == "clustering":
            return ecdf(self.local_clustering)
        values, counts = self.hops.values_and_counts()
        return Ecdf.from_counts(values, counts)


def profile_graph(g: Graph, mode="auto", seed=0) -> GraphProfile:
    """Compute all three properties of ``g``.

    ``mode`` is ``"auto"``, ``"exact"`` or an int number of BFS sources.
    """
    rng = np.random.default_rng([int(seed), _PATH_STREAM])
    if mode == "auto":
        apl, hist, label = auto_path_length_stats(g, rng)
    else:
        k = None if mode == "exact" else min(int(mode), g.node_count)
        apl, hist = path_length_stats(g, k, rng)
        label = mode_label(k)
    local, avg_c = clustering(g)
    return GraphProfile(average_degree(g), avg_c, apl, label, g.degrees(), local, hist)


def _check_phi(g, phi):
    if node_target(phi, g.node_count) < 2:
        raise ConfigError(
            f"phi={phi} gives a node target below 2 on a graph with {g.node_count} nodes")


def _paired_samples(g, phi, seed, methods):
    """Yield ``(method, Sample)`` for the requested methods, sharing base draws."""
    bases = {}
    for method in methods:
        base = "ES" if method in ("ES", "TIES") else "WES"
        if base not in bases:
            fn = es_sample if base == "ES" else wes_sample
            bases[base] = fn(g, phi, seed)
        s = bases[base]
        yield method, (totally_induce(g, s) if method.startswith("TI") else s)


def _load(config, graph):
    if graph is not None:
        return graph
    return load_edge_list(config.dataset_path)


# point statistics


@dataclass
class PointStatsReport:
    dataset: str
    rows: list
    rmse_rows: list
    meta: dict

    def write(self, output_dir, fmt="csv"):
        os.makedirs(output_dir, exist_ok=True)
        paths = []
        if fmt == "json":
            p = os.path.join(output_dir, "point_stats.json")
            _write_json(p, {"meta": self.meta, "point_stats": self.rows, "rmse": self.rmse_rows})
            return [p]
        p = os.path.join(output_dir, "point_stats.csv")
        _write_csv(p, POINT_HEADER, self.rows)
        paths.append(p)
        p = os.path.join(output_dir, "rmse.csv")
        _write_csv(p, RMSE_HEADER, self.rmse_rows)
        paths.append(p)
        p = os.path.join(output_dir, "point_stats_meta.json")
        _write_json(p, self.meta)
        paths.append(p)
        return paths


def run_point_statistics(config: ExperimentConfig, graph: Graph | None = None) -> PointStatsReport:
    g = _load(config, graph)
    for phi in config.fractions:
        _check_phi(g, phi)
    original = profile_graph(g, parse_path_mode(config.path_length_mode), config.base_seed)
    log.info("original %s: deg=%.4f cc=%.4f apl=%.4f (%s)", config.name,
             original.average_degree, original.average_clustering,
             original.average_path_length, original.path_length_mode)

    values = {(m, p, phi): [] for m in config.methods for p in PROPERTIES for phi in config.fractions}
    sizes = []
    modes = set()
    for phi in config.fractions:
        for rep in range(config.repetitions):
            seed = config.base_seed + rep
            for method, s in _paired_samples(g, phi, seed, config.methods):
                prof = profile_graph(s.to_graph(g), "auto", seed)
                modes.add(prof.path_length_mode)
                sizes.append({"method": method, "phi": phi, "seed": seed,
                              "nodes": s.n_nodes, "edges": s.n_edges,
                              "exhausted": s.exhausted})
                for prop in PROPERTIES:
                    values[(method, prop, phi)].append(prof.point(prop))
            log.debug("phi=%s rep=%d done", phi, rep)

    rows = []
    for method in config.methods:
        for prop in PROPERTIES:
            denom = original.point(prop)
            for phi in config.fractions:
                ratios = np.asarray(values[(method, prop, phi)]) / denom if denom else \
                    np.full(config.repetitions, np.nan)
                if ratios.size >= 2:
                    mean, lo, hi = mean_ci(ratios)
                else:
                    mean = lo = hi = float(ratios[0])
                rows.append({"dataset": config.name, "method": method, "property": prop,
                             "phi": phi, "mean_ratio": float(mean),
                             "ci_low": float(lo), "ci_high": float(hi)})
    rmse_rows = []
    for method in config.methods:
        for prop in PROPERTIES:
            sampled = [v for phi in config.fractions for v in values[(method, prop, phi)]]
            rmse_rows.append({"dataset": config.name, "method": method, "property": prop,
                              "rmse": rmse([original.point(prop)] * len(sampled), sampled)})
    meta = {
        "dataset": config.name,
        "graph_sha256": g.content_hash(),
        "nodes": g.node_count,
        "edges": g.edge_count,
        "original": {p: original.point(p) for p in PROPERTIES},
        "original_path_length_mode": original.path_length_mode,
        "sample_path_length_modes": sorted(modes),
        "repetitions": config.repetitions,
        "base_seed": config.base_seed,
        "ci_defined": config.repetitions >= 2,
        "samples": sizes,
    }
    if config.repetitions < 2:
        log.warning("repetitions=1: confidence intervals are undefined and reported "
                    "with zero width")
    return PointStatsReport(config.name, rows, rmse_rows, meta)


# distributions


@dataclass
class DistributionReport:
    dataset: str
    ks_rows: list
    sampled_ecdfs: dict
    original_ecdfs: dict
    meta: dict

    def write(self, output_dir, fmt="csv"):
        os.makedirs(output_dir, exist_ok=True)
        if fmt == "json":
            p = os.path.join(output_dir, "distributions.json")
            _write_json(p, {
                "meta": self.meta,
                "ks": self.ks_rows,
                "original_ecdf": {k: v.rows() for k, v in self.original_ecdfs.items()},
                "sampled_ecdf": {f"{m}/{k}": v.rows()
                                 for (m, k), v in self.sampled_ecdfs.items()},
            })
            return [p]
        paths = [os.path.join(output_dir, "ks.csv")]
        _write_csv(paths[0], KS_HEADER, self.ks_rows)
        ecdf_dir = os.path.join(output_dir, "ecdf")
        os.makedirs(ecdf_dir, exist_ok=True)
        for prop, e in self.original_ecdfs.items():
            paths.append(_write_ecdf(ecdf_dir, f"{self.dataset}_original_{prop}", e))
        for (method, prop), e in self.sampled_ecdfs.items():
            paths.append(_write_ecdf(ecdf_dir, f"{self.dataset}_{method}_{prop}", e))
        p = os.path.join(output_dir, "distributions_meta.json")
        _write_json(p, self.meta)
        paths.append(p)
        return paths


def distribution_distances(original: GraphProfile, sampled: GraphProfile) -> dict:
    """KS distance between two profiles for each property."""
    return {p: ks_distance(original.ecdf(p), sampled.ecdf(p)) for p in PROPERTIES}


def run_distributions(config: ExperimentConfig, graph: Graph | None = None) -> DistributionReport:
    g = _load(config, graph)
    phi = config.dist_phi
    _check_phi(g, phi)
    original = profile_graph(g, parse_path_mode(config.path_length_mode), config.base_seed)
    original_ecdfs = {p: original.ecdf(p) for p in PROPERTIES}

    ks = {(m, p): [] for m in config.methods for p in PROPERTIES}
    kept = {}
    for rep in range(config.repetitions):
        seed = config.base_seed + rep
        for method, s in _paired_samples(g, phi, seed, config.methods):
            if s.n_nodes == 0:
                raise ConfigError("sampled subgraph is empty")
            prof = profile_graph(s.to_graph(g), "auto", seed)
            for prop in PROPERTIES:
                e = prof.ecdf(prop)
                ks[(method, prop)].append(ks_distance(original_ecdfs[prop], e))
                if rep == 0:
                    kept[(method, prop)] = e
    ks_rows = [{"dataset": config.name, "method": m, "property": p,
                "ks_mean": float(np.mean(ks[(m, p)]))}
               for m in config.methods for p in PROPERTIES]
    meta = {
        "dataset": config.name,
        "graph_sha256": g.content_hash(),
        "phi": phi,
        "repetitions": config.repetitions,
        "base_seed": config.base_seed,
        "ecdf_seed": config.base_seed,
        "original_path_length_mode": original.path_length_mode,
        "ks_per_repetition": [{"method": m, "property": p, "values": ks[(m, p)]}
                              for m in config.methods for p in PROPERTIES],
    }
    return DistributionReport(config.name, ks_rows, kept, original_ecdfs, meta)


# output helpers


def _fmt(v):
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(row[k]) for k in header])


def _write_ecdf(directory, stem, e: Ecdf):
    path = os.path.join(directory, f"{stem}.csv")
    _write_csv(path, ECDF_HEADER, [{"x": x, "cum_prob": c} for x, c in e.rows()])
    return path


def _write_json(path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True, default=_json_default)
        fh.write("\n")


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"not JSON serialisable: {type(o).__name__}")
