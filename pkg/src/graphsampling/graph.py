"""Immutable undirected simple graphs backed by an indexed edge list and CSR adjacency."""

from __future__ import annotations

import gzip
import hashlib
import io
import os
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .exceptions import EdgeListParseError, EmptyGraphError, GraphError

__all__ = [
    "Graph",
    "LoadOptions",
    "load_edge_list",
    "neighboring_edges",
    "induced_subgraph",
]


class Graph:
    """Undirected simple graph on dense node ids ``0 .. node_count - 1``.

    Edges are stored once as canonical ``(u, v)`` pairs with ``u < v``; the
    position of a pair in :attr:`edges` is its edge id. Adjacency is kept in
    CSR form where every entry carries both the neighbor and the edge id, and
    each node's neighbors are sorted ascending.

    Parameters
    ----------
    node_count : int
        Number of nodes. May exceed the largest endpoint (isolated nodes).
    edges : array-like of shape (m, 2)
        Endpoint pairs. Order within a pair is irrelevant.
    node_labels : array-like of shape (node_count,), optional
        External id of every dense node id. Defaults to the identity.
    """

    def __init__(self, node_count, edges, node_labels=None):
        node_count = int(node_count)
        if node_count < 0:
            raise GraphError("node_count must be non-negative")
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if edges.size:
            if edges.min() < 0 or edges.max() >= node_count:
                raise GraphError("edge endpoint out of range [0, node_count)")
            lo = edges.min(axis=1)
            hi = edges.max(axis=1)
            if np.any(lo == hi):
                raise GraphError("self-loops are not allowed")
            edges = np.column_stack([lo, hi])
            keys = lo * node_count + hi
            if np.unique(keys).size != keys.size:
                raise GraphError("duplicate undirected edge")
        self._n = node_count
        self._edges = edges
        self._edges.setflags(write=False)

        if node_labels is None:
            labels = np.arange(node_count, dtype=np.int64)
        else:
            labels = np.asarray(node_labels, dtype=np.int64)
            if labels.shape != (node_count,):
                raise GraphError("node_labels must have one entry per node")
        self._labels = labels
        self._labels.setflags(write=False)
        self._build_adjacency()
        self._hash = None

    def _build_adjacency(self):
        m = self._edges.shape[0]
        src = np.concatenate([self._edges[:, 0], self._edges[:, 1]])
        dst = np.concatenate([self._edges[:, 1], self._edges[:, 0]])
        eid = np.concatenate([np.arange(m), np.arange(m)])
        order = np.lexsort((dst, src))
        counts = np.bincount(src, minlength=self._n)
        indptr = np.zeros(self._n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        self._indptr = indptr
        self._nbr = dst[order]
        self._eid = eid[order]
        for arr in (self._indptr, self._nbr, self._eid):
            arr.setflags(write=False)

    # basic accessors

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return int(self._edges.shape[0])

    @property
    def edges(self) -> np.ndarray:
        """Read-only ``(m, 2)`` array of canonical endpoint pairs."""
        return self._edges

    @property
    def node_labels(self) -> np.ndarray:
        return self._labels

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def adjacency_nodes(self) -> np.ndarray:
        return self._nbr

    @property
    def adjacency_edges(self) -> np.ndarray:
        return self._eid

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def neighbors(self, v: int) -> np.ndarray:
        self._check_node(v)
        return self._nbr[self._indptr[v]:self._indptr[v + 1]]

    def incident_edges(self, v: int) -> np.ndarray:
        self._check_node(v)
        return self._eid[self._indptr[v]:self._indptr[v + 1]]

    def adjacency(self, v: int):
        """List of ``(neighbor, edge_id)`` pairs of node ``v``."""
        return list(zip(self.neighbors(v).tolist(), self.incident_edges(v).tolist()))

    def endpoints(self, e: int):
        self._check_edge(e)
        u, v = self._edges[e]
        return int(u), int(v)

    def find_edge(self, u: int, v: int):
        """Edge id joining dense nodes ``u`` and ``v``, or ``None``."""
        nbrs = self.neighbors(u)
        pos = np.searchsorted(nbrs, v)
        if pos < nbrs.size and nbrs[pos] == v:
            return int(self._eid[self._indptr[u] + pos])
        return None

    def node_index(self, label: int) -> int:
        """Dense id of the node with external id ``label``."""
        pos = np.flatnonzero(self._labels == label)
        if pos.size == 0:
            raise GraphError(f"no node labelled {label}")
        return int(pos[0])

    def edge_by_label(self, a: int, b: int) -> int:
        """Edge id joining the nodes with external ids ``a`` and ``b``."""
        e = self.find_edge(self.node_index(a), self.node_index(b))
        if e is None:
            raise GraphError(f"no edge between {a} and {b}")
        return e

    def to_sparse(self) -> sp.csr_matrix:
        """Symmetric 0/1 adjacency matrix."""
        data = np.ones(self._nbr.size, dtype=np.int32)
        return sp.csr_matrix((data, self._nbr, self._indptr), shape=(self._n, self._n))

    def labelled_edges(self) -> np.ndarray:
        return self._labels[self._edges] if self.edge_count else self._edges.copy()

    def content_hash(self) -> str:
        """SHA-256 over node count, labels and edge list."""
        if self._hash is None:
            h = hashlib.sha256()
            h.update(np.int64(self._n).tobytes())
            h.update(np.ascontiguousarray(self._labels).tobytes())
            h.update(np.ascontiguousarray(self._edges).tobytes())
            self._hash = h.hexdigest()
        return self._hash

    def _check_node(self, v):
        if not 0 <= v < self._n:
            raise IndexError(f"node id {v} out of range [0, {self._n})")

    def _check_edge(self, e):
        if not 0 <= e < self.edge_count:
            raise IndexError(f"edge id {e} out of range [0, {self.edge_count})")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._labels, other._labels)
            and np.array_equal(self._edges, other._edges)
        )

    __hash__ = None

    def __repr__(self):
        return f"Graph(nodes={self._n}, edges={self.edge_count})"

    # construction helpers

    @classmethod
    def from_edge_pairs(cls, pairs, *, drop_self_loops=True):
        """Build a graph from arbitrary external-id pairs.

        Node ids are remapped to dense ids in ascending label order; repeated
        and reversed pairs collapse to one edge.
        """
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        if pairs.shape[0] == 0:
            raise EmptyGraphError("no edges given")
        if drop_self_loops:
            kept = pairs[pairs[:, 0] != pairs[:, 1]]
        else:
            kept = pairs
            if np.any(pairs[:, 0] == pairs[:, 1]):
                raise GraphError("self-loop present and drop_self_loops is False")
        if kept.shape[0] == 0:
            raise EmptyGraphError("edge list contains only self-loops")
        # nodes touched only by dropped self-loops are not kept
        labels, inverse = np.unique(kept, return_inverse=True)
        inverse = inverse.reshape(kept.shape)
        n = labels.size
        lo = inverse.min(axis=1)
        hi = inverse.max(axis=1)
        keys = np.unique(lo * n + hi)
        edges = np.column_stack([keys // n, keys % n])
        return cls(n, edges, labels)

    def edge_subgraph(self, node_ids, edge_ids) -> "Graph":
        """Graph on ``node_ids`` holding only ``edge_ids`` (relabelled densely)."""
        nodes = np.unique(np.asarray(node_ids, dtype=np.int64))
        eids = np.asarray(edge_ids, dtype=np.int64)
        if nodes.size and (nodes[0] < 0 or nodes[-1] >= self._n):
            raise GraphError("node id out of range")
        remap = np.full(self._n, -1, dtype=np.int64)
        remap[nodes] = np.arange(nodes.size)
        sub = remap[self._edges[eids]] if eids.size else np.empty((0, 2), np.int64)
        if sub.size and sub.min() < 0:
            raise GraphError("edge endpoint outside the given node set")
        return Graph(nodes.size, sub, self._labels[nodes])


def neighboring_edges(g: Graph, e: int) -> np.ndarray:
    """Ids of all edges other than ``e`` sharing an endpoint with ``e``."""
    u, v = g.endpoints(e)
    inc = np.concatenate([g.incident_edges(u), g.incident_edges(v)])
    return inc[inc != e]


def induced_subgraph(g: Graph, nodes) -> Graph:
    """Subgraph on ``nodes`` containing every edge with both endpoints in the set."""
    nodes = np.unique(np.asarray(list(nodes) if isinstance(nodes, (set, frozenset)) else nodes,
                                 dtype=np.int64))
    if nodes.size and (nodes[0] < 0 or nodes[-1] >= g.node_count):
        raise GraphError("node id out of range")
    mask = np.zeros(g.node_count, dtype=bool)
    mask[nodes] = True
    keep = np.flatnonzero(mask[g.edges[:, 0]] & mask[g.edges[:, 1]])
    return g.edge_subgraph(nodes, keep)


@dataclass(frozen=True)
class LoadOptions:
    comment_prefixes: frozenset = field(default_factory=lambda: frozenset({"#", "%"}))
    ignore_extra_columns: bool = True
    drop_self_loops: bool = True

    def __post_init__(self):
        if not self.comment_prefixes:
            raise ValueError("comment_prefixes must be non-empty")
        object.__setattr__(self, "comment_prefixes", frozenset(self.comment_prefixes))


def _open_source(source):
    if isinstance(source, (str, os.PathLike)):
        path = os.fspath(source)
        if path.endswith(".gz"):
            return gzip.open(path, "rb"), True
        return open(path, "rb"), True
    if isinstance(source, (bytes, bytearray)):
        return io.BytesIO(source), True
    return source, False


def load_edge_list(source, opts: LoadOptions | None = None) -> Graph:
    """Read a whitespace-separated edge list into a simple undirected graph.

    ``source`` may be a path (``.gz`` is decompressed), raw bytes, or a binary
    or text stream. Lines starting with a comment prefix and blank lines are
    skipped; LF and CRLF endings are both accepted.
    """
    opts = opts or LoadOptions()
    prefixes = tuple(opts.comment_prefixes)
    fh, owned = _open_source(source)
    us, vs = [], []
    try:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.decode("utf-8") if isinstance(raw, bytes) else raw
            stripped = line.strip()
            if not stripped or stripped.startswith(prefixes):
                continue
            tokens = stripped.split()
            if len(tokens) < 2 or (len(tokens) > 2 and not opts.ignore_extra_columns):
                raise EdgeListParseError(lineno, line.rstrip("\r\n"),
                                         "expected exactly two columns"
                                         if len(tokens) > 2 else
                                         "expected two integer node ids")
            try:
                us.append(int(tokens[0]))
                vs.append(int(tokens[1]))
            except ValueError:
                raise EdgeListParseError(lineno, line.rstrip("\r\n")) from None
    finally:
        if owned:
            fh.close()
    if not us:
        raise EmptyGraphError("edge list contains no edges")
    pairs = np.column_stack([np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64)])
    return Graph.from_edge_pairs(pairs, drop_self_loops=opts.drop_self_loops)
