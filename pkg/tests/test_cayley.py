import re

import pytest

from mingen import groupio
from mingen.cayley import PALETTE, build_digraph, build_graph, degree_stats, to_dot
from mingen.errors import UsageError

from conftest import names
from oracles import adjacency_by_definition


def test_identity_only_gives_no_arcs(a4):
    assert build_digraph(a4, [0]).arcs == ()
    assert build_digraph(a4, []).arcs == ()


def test_b_arcs_pair_up(a4):
    (b,) = names(a4, "b")
    dg = build_digraph(a4, [b])
    assert len(dg.arcs) == 12
    pairs = {(s, t) for s, t, _ in dg.arcs}
    assert all((t, s) in pairs for s, t in pairs)
    assert len({frozenset(p) for p in pairs}) == 6


def test_c_arcs_form_directed_triangles(a4):
    (c,) = names(a4, "c")
    dg = build_digraph(a4, [c])
    succ = {s: t for s, t, _ in dg.arcs}
    assert len(dg.arcs) == 12
    for v in range(12):
        assert succ[succ[succ[v]]] == v and succ[v] != v
    cycles = {frozenset({v, succ[v], succ[succ[v]]}) for v in range(12)}
    assert len(cycles) == 4


def test_arc_order_is_source_then_label(a4):
    A = names(a4, "c b")
    dg = build_digraph(a4, A)
    assert [(s, a) for s, _, a in dg.arcs] == [(g, a) for g in range(12) for a in A]


def test_graph_examples(a4):
    assert build_graph(a4, []).edges == ()
    assert len(build_graph(a4, names(a4, "b")).edges) == 6
    assert set(build_graph(a4, names(a4, "b c")).degrees()) == {3}


def test_graph_matches_definition(corpus8):
    for G in corpus8.values():
        for A in ([], [1], list(range(G.order))[: G.order // 2 + 1]):
            A = [a for a in A if a < G.order]
            adj = adjacency_by_definition(G.table, A)
            expected = {(u, v) for u in adj for v in adj[u] if u < v}
            assert build_graph(G, A).edge_set == expected


@pytest.mark.parametrize("gens, degree", [("b", 1), ("c", 2), ("b c", 3), ("c cc", 2)])
def test_graph_degree(a4, gens, degree):
    assert degree_stats(build_graph(a4, names(a4, gens))).degree == degree


def test_digraph_degree(a4):
    stats = degree_stats(build_digraph(a4, [0]))
    assert stats.regular and stats.indegree == stats.outdegree == 0
    stats = degree_stats(build_digraph(a4, names(a4, "e b c")))
    assert stats.indegree == stats.outdegree == 2


def test_dot_trivial_group():
    G = groupio.cyclic(1)
    dot = to_dot(build_digraph(G, []))
    assert dot.startswith("digraph")
    assert len(re.findall(r"^\s+\d+ \[label=", dot, re.M)) == 1
    assert "->" not in dot


@pytest.mark.parametrize("gens, arcs, colors", [("b c", 24, 2), ("b a c", 36, 3)])
def test_dot_color_digraph(a4, gens, arcs, colors):
    dot = to_dot(build_digraph(a4, names(a4, gens)))
    assert len(re.findall(r"^\s+\d+ \[label=", dot, re.M)) == 12
    arc_lines = re.findall(r"^\s+\d+ -> \d+ \[color=\"(\w+)\"\];$", dot, re.M)
    assert len(arc_lines) == arcs
    assert set(arc_lines) == set(PALETTE[:colors])
    assert "\r" not in dot and dot.endswith("}\n")


def test_dot_is_deterministic(a4):
    A = names(a4, "b c")
    assert to_dot(build_digraph(a4, A)) == to_dot(build_digraph(a4, list(A)))


def test_dot_first_color_goes_to_first_generator(a4):
    b, c = names(a4, "b c")
    dot = to_dot(build_digraph(a4, [b, c]))
    assert f'0 -> {b} [color="{PALETTE[0]}"]' in dot
    assert f'0 -> {c} [color="{PALETTE[1]}"]' in dot


def test_palette_exhaustion():
    G = groupio.cyclic(14)
    dg = build_digraph(G, range(14))
    with pytest.raises(UsageError):
        to_dot(dg)
    custom = [f"c{i}" for i in range(13)]
    assert 'color="c12"' in to_dot(dg, colors=custom)


def test_undirected_dot(a4):
    dot = to_dot(build_graph(a4, names(a4, "b")))
    assert dot.startswith("graph") and dot.count(" -- ") == 6
