"""Smoke tests for the python bindings: each operation family gets one
exercise against an independently known small value."""

import pytest

import deckforge as df


def test_graph_basics():
    g = df.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4
    assert g.degree(1) == 2
    assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_graph6_roundtrip():
    g = df.cycle_graph(5)
    text = df.write_graph6(g)
    h = df.parse_graph6(text)
    assert df.is_isomorphic(g, h)
    assert df.write_graph6(h) == text


def test_canonical_form_is_isomorphism_invariant():
    a = df.Graph(4, [(0, 1), (1, 2), (2, 3)])
    b = df.Graph(4, [(2, 0), (0, 3), (3, 1)])  # P_4 relabeled
    assert df.canonical_form(a) == df.canonical_form(b)
    assert df.is_isomorphic(a, b)
    assert df.automorphism_count(df.cycle_graph(5)) == 10


def test_deck_census():
    d = df.compute_deck(df.disjoint_union(df.cycle_graph(4), df.path_graph(1)), 3)
    assert d.n == 5 and d.k == 3
    assert d.total() == 10
    assert d.count_of(df.canonical_form(df.path_graph(3))) == 4
    ok, reason = df.validate_deck(d)
    assert ok, reason


def test_deck_algebra():
    g = df.spider_graph(2, 1, 1)
    d3 = df.compute_deck(g, 3)
    assert df.decks_equal(df.derive_subdeck(d3), df.compute_deck(g, 2))
    assert df.decks_equal(
        df.deck_complement(d3), df.compute_deck(df.complement(g), 3)
    )
    assert df.count_induced(d3, df.path_graph(2)) == 4  # edges of the spider
    assert df.deck_from_json(df.deck_to_json(d3)) == d3


def test_exceptional_pair_and_degrees():
    a = df.disjoint_union(df.cycle_graph(4), df.path_graph(1))
    b = df.spider_graph(2, 1, 1)
    assert df.decks_equal(df.compute_deck(a, 3), df.compute_deck(b, 3))
    assert not df.is_isomorphic(a, b)
    assert df.degree_list_from_deck(df.compute_deck(df.cycle_graph(6), 4)) == [2] * 6
    with pytest.raises(df.ReconError):
        df.degree_list_from_deck(df.compute_deck(df.star_graph(4), 3))


def test_multipartite_roundtrip():
    d = df.compute_deck(df.complete_multipartite([7, 4, 3]), 4)
    assert df.reconstruct_complete_multipartite(d) == [7, 4, 3]
    assert (
        df.recognize_hereditary_class(d) == df.HereditaryClass.complete_multipartite
    )


def test_component_roundtrip():
    g = df.disjoint_union(
        df.disjoint_union(df.complete_graph(3), df.complete_graph(3)),
        df.path_graph(2),
    )
    comps = df.reconstruct_components(df.compute_deck(g, 6))
    rebuilt = df.assemble_components(comps)
    assert df.is_isomorphic(rebuilt, g)


def test_regular_cutvertex_roundtrip():
    two_k4 = df.disjoint_union(df.complete_graph(4), df.complete_graph(4))
    rec = df.reconstruct_regular_cutvertex(df.compute_deck(two_k4, 4), 3)
    assert df.is_isomorphic(rec, two_k4)


def test_families():
    g, h, k = df.same_deck_pair("erpart_pair")
    assert k == 3
    assert df.decks_equal(df.compute_deck(g, 3), df.compute_deck(h, 3))
    ok, why = df.verify_construction("spider_pair", [], 4)
    assert ok, why
    ok, why = df.verify_construction("cycle_split", [3, 4], 3)
    assert not ok  # q = 3 violates q >= k+1 = 4


def test_search():
    classes = df.same_deck_classes(5, 3)
    assert len(classes) == 2
    assert all(len(cls) == 2 for cls in classes)
    assert df.max_reconstructibility(df.cycle_graph(6)) == 3
    assert len(df.enumerate_graphs(5)) == 34


def test_taylor_threshold():
    assert df.taylor_threshold(3) > 0
