"""Text serialisation of graphs and samples.

Sample files look like::

    # method=WES phi=0.06 seed=7 nodes=3 edges=2
    10
    11
    12
    --
    10 11
    11 12

Node and edge lines use the original (external) node ids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import EdgeListParseError
from .graph import Graph
from .samplers import Sample

__all__ = ["write_edge_list", "write_sample", "read_sample", "SampleRecord"]

SEPARATOR = "--"


def write_edge_list(g: Graph, fh) -> None:
    for u, v in g.labelled_edges().tolist():
        fh.write(f"{u} {v}\n")


def format_sample(g: Graph, s: Sample) -> str:
    labels = g.node_labels
    seed = "none" if s.seed is None else str(s.seed)
    lines = [f"# method={s.method} phi={s.phi!r} seed={seed} "
             f"nodes={s.n_nodes} edges={s.n_edges}"]
    lines.extend(str(x) for x in labels[s.node_ids].tolist())
    lines.append(SEPARATOR)
    if s.n_edges:
        pairs = labels[g.edges[s.edge_ids]]
        lines.extend(f"{u} {v}" for u, v in pairs.tolist())
    return "\n".join(lines) + "\n"


def write_sample(g: Graph, s: Sample, fh) -> None:
    fh.write(format_sample(g, s))


@dataclass
class SampleRecord:
    method: str
    phi: float
    seed: int | None
    nodes: list
    edges: list


def read_sample(fh) -> SampleRecord:
    """Parse a sample file back into external-id node and edge lists."""
    lines = [ln.rstrip("\r\n") for ln in fh]
    if not lines or not lines[0].startswith("#"):
        raise EdgeListParseError(1, lines[0] if lines else "", "missing sample header")
    header = dict(tok.split("=", 1) for tok in lines[0][1:].split())
    try:
        sep = lines.index(SEPARATOR)
    except ValueError:
        raise EdgeListParseError(len(lines), "", "missing '--' separator") from None
    nodes = [int(x) for x in lines[1:sep] if x.strip()]
    edges = []
    for lineno, ln in enumerate(lines[sep + 1:], start=sep + 2):
        if not ln.strip():
            continue
        parts = ln.split()
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except (ValueError, IndexError):
            raise EdgeListParseError(lineno, ln) from None
    if int(header["nodes"]) != len(nodes) or int(header["edges"]) != len(edges):
        raise EdgeListParseError(1, lines[0], "header counts do not match body")
    seed = None if header["seed"] == "none" else int(header["seed"])
    return SampleRecord(header["method"], float(header["phi"]), seed, nodes, edges)

