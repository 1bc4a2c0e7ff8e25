import pytest

from mingen import groupio
from mingen.cayley import build_graph
from mingen.components import (
    DisjointSet,
    component_count,
    decompose,
    identity_component,
    path_witness,
    subgroup_graph_stats,
    translation_isomorphism,
    verify_coset_structure,
    verify_disjoint_union,
)
from mingen.group import closure

from conftest import names
from oracles import adjacency_by_definition, brute_closure, dfs_components


def test_disjoint_set():
    ds = DisjointSet(5)
    assert ds.union(0, 1) and ds.union(3, 4) and not ds.union(1, 0)
    assert ds.find(0) == ds.find(1) != ds.find(3)


def test_decompose_empty(a4):
    d = decompose(build_graph(a4, []))
    assert d.blocks == tuple((g,) for g in range(12))


def test_decompose_b(a4):
    d = decompose(build_graph(a4, names(a4, "b")))
    assert d.count == 6 and all(len(b) == 2 for b in d.blocks)
    assert d.rep == tuple(b[0] for b in d.blocks) == tuple(sorted(d.rep))


def test_decompose_connected(a4):
    assert decompose(build_graph(a4, names(a4, "b a c"))).count == 1


def test_decompose_matches_dfs_oracle(corpus8):
    for G in corpus8.values():
        for A in ([], [1], [1, 2], [G.order - 1]):
            A = [a for a in A if a < G.order]
            d = decompose(build_graph(G, A))
            expected = dfs_components(adjacency_by_definition(G.table, A))
            assert {frozenset(b) for b in d.blocks} == set(expected)


@pytest.mark.parametrize("gens, k", [("b a", 3), ("c", 4), ("b c", 1), ("", 12)])
def test_component_count(a4, gens, k):
    assert component_count(a4, names(a4, gens)) == k
    assert k * len(brute_closure(a4.table, names(a4, gens))) == 12


@pytest.mark.parametrize("gens, expected", [("", "e"), ("b", "e b"), ("c", "e c cc")])
def test_identity_component(a4, gens, expected):
    d = decompose(build_graph(a4, names(a4, gens)))
    assert set(identity_component(d)) == set(names(a4, expected))


@pytest.mark.parametrize("gens", ["b", "", "b c", "c", "a"])
def test_coset_structure(a4, gens):
    A = names(a4, gens)
    assert verify_coset_structure(a4, A, decompose(build_graph(a4, A))).ok


def test_coset_structure_reports_counterexample(a4):
    A = names(a4, "b")
    wrong = decompose(build_graph(a4, names(a4, "c")))
    check = verify_coset_structure(a4, A, wrong)
    assert not check.ok and check.counterexample


def test_translation_identity_pair(a4):
    graph = build_graph(a4, names(a4, "c"))
    d = decompose(graph)
    assert translation_isomorphism(graph, d, 2, 2).translator == 0


def test_translation_between_b_blocks(a4):
    e, b, a, ab = names(a4, "e b a ab")
    graph = build_graph(a4, [b])
    d = decompose(graph)
    i, j = d.assignment[e], d.assignment[a]
    w = translation_isomorphism(graph, d, i, j)
    assert w.translator == a
    assert {a4.mul(a, e), a4.mul(a, b)} == {a, ab}
    assert graph.has_edge(a, ab)


def test_translation_between_triangles(a4):
    graph = build_graph(a4, names(a4, "c"))
    d = decompose(graph)
    for i in range(d.count):
        for j in range(d.count):
            t = translation_isomorphism(graph, d, i, j).translator
            tri = [(u, v) for u, v in graph.edges if d.assignment[u] == i]
            image = {tuple(sorted((a4.mul(t, u), a4.mul(t, v)))) for u, v in tri}
            assert image == {(u, v) for u, v in graph.edges if d.assignment[u] == j}


def test_path_witness_trivial(a4):
    graph = build_graph(a4, names(a4, "b"))
    word = path_witness(graph, 5, 5)
    assert word.letters == () and word.evaluate(a4) == 0


def test_path_witness_single_step(a4):
    b, c = names(a4, "b c")
    word = path_witness(build_graph(a4, [b, c]), 0, c)
    assert word.letters == ((c, 1),)
    assert word.evaluate(a4) == c


def test_path_witness_absent(a4):
    b, a = names(a4, "b a")
    assert path_witness(build_graph(a4, [b]), 0, a) is None


def test_path_witness_uses_inverse_steps(a4):
    c, cc = names(a4, "c cc")
    word = path_witness(build_graph(a4, [c]), 0, cc)
    assert word.letters == ((c, -1),)


def test_path_words_evaluate_to_quotient(a4):
    A = names(a4, "a c")
    graph = build_graph(a4, A)
    for u in range(12):
        for v in range(12):
            word = path_witness(graph, u, v)
            assert word is not None
            assert word.evaluate(a4) == a4.mul(a4.inv(u), v)
            assert all(g in A and eps in (1, -1) for g, eps in word.letters)


def test_disjoint_union(a4):
    graph = build_graph(a4, names(a4, "c"))
    assert verify_disjoint_union(graph, decompose(graph))


def test_subgroup_graph_stats_trivial(a4):
    s = subgroup_graph_stats(a4, closure(a4, []))
    assert (s.components, s.each_complete, s.edge_total) == (12, True, 0)


@pytest.mark.parametrize("gens, k, edges", [("b a", 3, 18), ("c", 4, 12)])
def test_subgroup_graph_stats(a4, gens, k, edges):
    s = subgroup_graph_stats(a4, closure(a4, names(a4, gens)))
    assert (s.components, s.each_complete, s.edge_total) == (k, True, edges)


def test_subgroup_graph_stats_dihedral6():
    G = groupio.dihedral(6)
    s = subgroup_graph_stats(G, closure(G, [1]))
    assert (s.components, s.each_complete, s.edge_total) == (2, True, 12 * 5 // 2)
