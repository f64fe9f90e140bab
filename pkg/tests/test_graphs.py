import json

import numpy as np
import pytest

from redwords import _bfs
from redwords.errors import PreconditionError, TooLargeError
from redwords.perms import Perm, all_perms, descending, identity, symmetry
from redwords.wordgraphs import (
    EdgeKind,
    build_word_graph,
    contract,
    cycle_parity_consistent,
    diameter,
    diameter_all_pairs,
    export_dot,
    graph_from_payloads,
    graph_json,
    is_bipartite,
    move_counts_along,
    payload_label,
)
from redwords.words import parse_word

P = Perm.parse


@pytest.fixture(scope="module")
def g4231():
    return build_word_graph(P("4231"))


def _edge_labels(g):
    return {
        (payload_label(g.vertices[u]), payload_label(g.vertices[v]), str(k))
        for u, v, k in g.edges
    }


def test_figure2_G(g4231):
    g = g4231
    assert {payload_label(v) for v in g.vertices} == {
        "12321", "31231", "13231", "31213", "13213", "32123",
    }
    want = set()
    for u, v, k in [
        ("13231", "31231", "C"),
        ("31231", "31213", "C"),
        ("31213", "13213", "C"),
        ("13213", "13231", "C"),
        ("12321", "13231", "B"),
        ("31213", "32123", "B"),
    ]:
        want.add((min(u, v), max(u, v), k))
    assert _edge_labels(g) == want


def test_figure2_contractions(g4231):
    c = contract(g4231, EdgeKind.COMMUTATION)
    assert {payload_label(v) for v in c.vertices} == {
        "{12321}",
        "{13213,13231,31213,31231}",
        "{32123}",
    }
    assert c.edge_count(EdgeKind.LONG_BRAID) == 2
    assert c.edge_count(EdgeKind.COMMUTATION) == 0

    b = contract(g4231, EdgeKind.LONG_BRAID)
    assert {payload_label(v) for v in b.vertices} == {
        "{12321,13231}",
        "{31231}",
        "{13213}",
        "{31213,32123}",
    }
    assert b.edge_count(EdgeKind.COMMUTATION) == 4
    assert b.edge_count(EdgeKind.LONG_BRAID) == 0


def test_figure2_diameters(g4231):
    assert diameter(g4231) == 4
    assert diameter(contract(g4231, EdgeKind.COMMUTATION)) == 2
    assert diameter(contract(g4231, EdgeKind.LONG_BRAID)) == 2


def test_trivial_graphs():
    g = build_word_graph(identity(4))
    assert g.n_vertices == 1 and not g.edges
    assert diameter(g) == 0
    for kind in EdgeKind:
        assert contract(g, kind).n_vertices == 1
    assert diameter(build_word_graph(P("321"))) == 1


def test_figure3_shape():
    g = build_word_graph(P("2143756"))
    assert g.n_vertices == 12
    assert g.edge_count(EdgeKind.COMMUTATION) == 15
    assert g.edge_count(EdgeKind.LONG_BRAID) == 0
    assert diameter(g) == 5


def test_move_counts(g4231):
    assert move_counts_along(g4231, parse_word("12321"), parse_word("32123")) == (2, 2)
    assert move_counts_along(g4231, parse_word("12321"), parse_word("12321")) == (0, 0)
    g321 = build_word_graph(P("321"))
    assert move_counts_along(g321, parse_word("121"), parse_word("212")) == (0, 1)
    with pytest.raises(PreconditionError):
        move_counts_along(g321, parse_word("121"), parse_word("999"))


def test_export_dot(g4231):
    g321 = build_word_graph(P("321"))
    dot = export_dot(g321)
    assert '"121"' in dot and '"212"' in dot
    assert dot.count("penwidth=2") == 1
    dot2 = export_dot(g4231)
    assert dot2.count(" -- ") == 6
    assert dot2.count("penwidth=2") == 2
    empty = graph_from_payloads([], [])
    assert export_dot(empty) == "graph reducedwords {\n}\n"


def test_graph_json_stable(g4231):
    a = json.dumps(graph_json(g4231), sort_keys=True)
    b = json.dumps(graph_json(build_word_graph(P("4231"))), sort_keys=True)
    assert a == b
    data = graph_json(g4231)
    assert set(data) == {"vertices", "edges"}
    assert all(k in ("C", "B") for _, _, k in data["edges"])


def test_vertex_cap():
    g = build_word_graph(P("4321"))
    with pytest.raises(TooLargeError):
        diameter(g, vertex_cap=10)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_structural_small(n):
    for p in all_perms(n):
        g = build_word_graph(p)
        assert cycle_parity_consistent(g)
        assert is_bipartite(contract(g, EdgeKind.COMMUTATION))
        # kind partition: simple graph, no pair joined by both kinds
        pairs = [(u, v) for u, v, _ in g.edges]
        assert len(pairs) == len(set(pairs))


def test_no_braid_edge_inside_commutation_class():
    for p in all_perms(4):
        g = build_word_graph(p)
        c = contract(g, EdgeKind.COMMUTATION)
        for u, v, k in c.edges:
            assert k is EdgeKind.LONG_BRAID
            assert u != v


def test_exact_diameter_engine_matches_all_pairs():
    # the pruned engine and the reference all-pairs agree on real graphs
    for p in [P("4321"), P("53241"), descending(5)]:
        g = build_word_graph(p)
        indptr, indices = g.csr()
        assert _bfs.exact_diameter(indptr, indices, g.n_vertices) == diameter_all_pairs(g)


def test_exact_diameter_random_graphs():
    rng = np.random.default_rng(7)
    for trial in range(5):
        n = int(rng.integers(30, 120))
        edges = {(i, i + 1) for i in range(n - 1)}  # spanning path keeps it connected
        extra = rng.integers(0, n, size=(3 * n, 2))
        for u, v in extra:
            if u != v:
                edges.add((min(int(u), int(v)), max(int(u), int(v))))
        payloads = list(range(n))
        g = graph_from_payloads(
            payloads, ((u, v, EdgeKind.COMMUTATION) for u, v in edges)
        )
        indptr, indices = g.csr()
        assert _bfs.exact_diameter(indptr, indices, n) == diameter_all_pairs(g)


def test_dihedral_graph_invariants():
    for p in all_perms(4):
        g = build_word_graph(p)
        base = (
            g.n_vertices,
            g.edge_count(EdgeKind.COMMUTATION),
            g.edge_count(EdgeKind.LONG_BRAID),
            diameter(g),
        )
        for op in ("R180", "R1", "RM1"):
            q = symmetry(p, op)
            h = build_word_graph(q)
            assert base == (
                h.n_vertices,
                h.edge_count(EdgeKind.COMMUTATION),
                h.edge_count(EdgeKind.LONG_BRAID),
                diameter(h),
            )
