import gzip
import io
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphsampling import (
    EdgeListParseError,
    EmptyGraphError,
    Graph,
    GraphError,
    LoadOptions,
    induced_subgraph,
    load_edge_list,
    neighboring_edges,
)
from graphsampling.testkit import GraphSpec, make_graph
from oracles import induced_edge_filter


def canonical_labelled(g):
    return {tuple(sorted(e)) for e in g.labelled_edges().tolist()}


def test_load_dedupes_and_skips_comments():
    g = load_edge_list(b"% meta\n1 2\n2 1\n2 3\n")
    assert g.node_count == 3
    assert g.edge_count == 2
    assert canonical_labelled(g) == {(1, 2), (2, 3)}


def test_load_drops_self_loops():
    g = load_edge_list(b"5 5\n5 6\n", LoadOptions(drop_self_loops=True))
    assert (g.node_count, g.edge_count) == (2, 1)


def test_self_loop_only_node_is_not_kept():
    g = load_edge_list(b"7 7\n5 6\n")
    assert g.node_count == 2
    assert sorted(g.node_labels.tolist()) == [5, 6]


def test_keep_self_loops_is_an_error():
    with pytest.raises(GraphError):
        load_edge_list(b"5 5\n5 6\n", LoadOptions(drop_self_loops=False))


def test_crlf_extra_columns_and_custom_comments():
    data = b"// header\r\n10 20 1 1234567\r\n20 30 1\r\n\r\n"
    g = load_edge_list(data, LoadOptions(comment_prefixes={"//"}))
    assert canonical_labelled(g) == {(10, 20), (20, 30)}


def test_extra_columns_rejected_when_not_ignored():
    with pytest.raises(EdgeListParseError):
        load_edge_list(b"1 2 3\n", LoadOptions(ignore_extra_columns=False))


def test_parse_error_reports_line_number():
    with pytest.raises(EdgeListParseError) as info:
        load_edge_list(b"# c\n1 2\n3 x\n")
    assert info.value.lineno == 3
    assert "line 3" in str(info.value)


def test_single_token_line_is_an_error():
    with pytest.raises(EdgeListParseError):
        load_edge_list(b"1 2\n3\n")


@pytest.mark.parametrize("data", [b"", b"# only comments\n% more\n", b"4 4\n"])
def test_empty_input(data):
    with pytest.raises(EmptyGraphError):
        load_edge_list(data)


def test_load_from_path_text_stream_and_gzip(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("1 2\n2 3\n")
    gz = tmp_path / "g.txt.gz"
    with gzip.open(gz, "wb") as fh:
        fh.write(b"1 2\n2 3\n")
    a = load_edge_list(p)
    b = load_edge_list(str(gz))
    c = load_edge_list(io.StringIO("1 2\n2 3\n"))
    assert a == b == c


def test_empty_options_rejected():
    with pytest.raises(ValueError):
        LoadOptions(comment_prefixes=set())


def test_adjacency_consistency():
    g = make_graph(GraphSpec("erdos_renyi", 40, 0.15, seed=3))
    assert g.degrees().sum() == 2 * g.edge_count
    seen = {}
    for v in range(g.node_count):
        for nb, e in g.adjacency(v):
            seen.setdefault(e, []).append(v)
            assert set(g.endpoints(e)) == {v, nb}
    assert all(sorted(vs) == list(g.endpoints(e)) for e, vs in seen.items())
    assert len(seen) == g.edge_count


def test_graph_constructor_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph(3, [[0, 0]])
    with pytest.raises(GraphError):
        Graph(3, [[0, 1], [1, 0]])
    with pytest.raises(GraphError):
        Graph(2, [[0, 2]])


def test_neighboring_edges_fig1(fig1_graph):
    g = fig1_graph
    e12 = g.edge_by_label(1, 2)
    assert set(neighboring_edges(g, e12).tolist()) == {g.edge_by_label(1, 3), g.edge_by_label(1, 4)}


def test_neighboring_edges_single_edge():
    g = load_edge_list(b"0 1\n")
    assert neighboring_edges(g, 0).size == 0


def test_neighboring_edges_triangle():
    g = make_graph(GraphSpec("complete", 3))
    for e in range(3):
        expected = {f for f in range(3) if f != e and set(g.endpoints(f)) & set(g.endpoints(e))}
        assert set(neighboring_edges(g, e).tolist()) == expected == set(range(3)) - {e}


def test_neighboring_edges_out_of_range():
    g = load_edge_list(b"0 1\n")
    with pytest.raises(IndexError):
        neighboring_edges(g, 5)


def test_neighboring_edges_symmetric_and_irreflexive():
    g = make_graph(GraphSpec("erdos_renyi", 30, 0.2, seed=11))
    nb = {e: set(neighboring_edges(g, e).tolist()) for e in range(g.edge_count)}
    for e, fs in nb.items():
        assert e not in fs
        for f in fs:
            assert e in nb[f]


def test_induced_subgraph_fig1(fig1_graph):
    sub = induced_subgraph(fig1_graph, range(4))
    assert sub.edge_count == 4
    assert (3, 4) in canonical_labelled(sub)


def test_induced_subgraph_empty(fig1_graph):
    sub = induced_subgraph(fig1_graph, [])
    assert sub.node_count == 0 and sub.edge_count == 0


def test_induced_subgraph_out_of_range(fig1_graph):
    with pytest.raises(GraphError):
        induced_subgraph(fig1_graph, [0, 9])


def test_induced_subgraph_matches_filter():
    rng = random.Random(5)
    g = make_graph(GraphSpec("erdos_renyi", 30, 0.2, seed=2))
    nodes = rng.sample(range(30), 10)
    sub = induced_subgraph(g, nodes)
    edge_list = [tuple(e) for e in g.edges.tolist()]
    expected = {edge_list[k] for k in induced_edge_filter(edge_list, nodes)}
    assert canonical_labelled(sub) == expected
    assert sub.node_count == 10


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 60), st.floats(0, 1), st.integers(0, 10_000), st.data())
def test_induced_subgraph_property(n, p, seed, data):
    g = make_graph(GraphSpec("erdos_renyi", n, p, seed=seed))
    nodes = data.draw(st.sets(st.integers(0, n - 1)))
    edge_list = [tuple(e) for e in g.edges.tolist()]
    expected = {edge_list[k] for k in induced_edge_filter(edge_list, nodes)}
    assert canonical_labelled(induced_subgraph(g, nodes)) == expected


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), min_size=1, max_size=80),
       st.randoms(use_true_random=False))
def test_load_is_order_and_orientation_invariant(pairs, rnd):
    pairs = [p for p in pairs if p[0] != p[1]] or [(0, 1)]
    text = "".join(f"{u} {v}\n" for u, v in pairs)
    shuffled = [(v, u) if rnd.random() < 0.5 else (u, v) for u, v in pairs]
    rnd.shuffle(shuffled)
    text2 = "".join(f"{u} {v}\n" for u, v in shuffled)
    a = load_edge_list(text.encode())
    b = load_edge_list(text2.encode())
    assert (a.node_count, a.edge_count) == (b.node_count, b.edge_count)
    assert canonical_labelled(a) == canonical_labelled(b)
    assert a == b


def test_content_hash_stable():
    a = make_graph(GraphSpec("cycle", 10))
    b = make_graph(GraphSpec("cycle", 10))
    assert a.content_hash() == b.content_hash()
    assert a.content_hash() != make_graph(GraphSpec("path", 10)).content_hash()


def test_to_sparse_symmetric():
    g = make_graph(GraphSpec("erdos_renyi", 25, 0.3, seed=1))
    a = g.to_sparse()
    assert (a != a.T).nnz == 0
    assert np.array_equal(np.asarray(a.sum(axis=1)).ravel(), g.degrees())
