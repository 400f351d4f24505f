"""Exact k-deck toolkit for small graphs.

The k-deck of a graph is the multiset of its k-vertex induced subgraphs,
each known only up to isomorphism.  This package computes decks exactly,
reconstructs hosts from decks (degree lists, complete multipartite graphs,
graphs with small components, regular graphs with a cut vertex), generates
the known same-deck families, and searches all small graphs for same-deck
pairs.
"""

from deckforge._core import (
    Deck,
    DeckError,
    Graph,
    HereditaryClass,
    ReconError,
    assemble_components,
    automorphism_count,
    canonical_form,
    check_distinguishing,
    complement,
    complete_graph,
    complete_multipartite,
    compute_deck,
    count_induced,
    cycle_graph,
    deck_common,
    deck_complement,
    deck_from_json,
    deck_to_json,
    decks_equal,
    degree_list_from_deck,
    derive_subdeck,
    disjoint_union,
    enumerate_graphs,
    find_leaf_blocks,
    graph_from_code,
    is_isomorphic,
    max_reconstructibility,
    parse_graph6,
    path_graph,
    recognize_hereditary_class,
    reconstruct_clique_union,
    reconstruct_complete_multipartite,
    reconstruct_components,
    reconstruct_regular_cutvertex,
    same_deck_classes,
    same_deck_pair,
    spider_graph,
    star_graph,
    taylor_threshold,
    validate_deck,
    verify_construction,
    write_graph6,
)

__all__ = [
    "Deck",
    "DeckError",
    "Graph",
    "HereditaryClass",
    "ReconError",
    "assemble_components",
    "automorphism_count",
    "canonical_form",
    "check_distinguishing",
    "complement",
    "complete_graph",
    "complete_multipartite",
    "compute_deck",
    "count_induced",
    "cycle_graph",
    "deck_common",
    "deck_complement",
    "deck_from_json",
    "deck_to_json",
    "decks_equal",
    "degree_list_from_deck",
    "derive_subdeck",
    "disjoint_union",
    "enumerate_graphs",
    "find_leaf_blocks",
    "graph_from_code",
    "is_isomorphic",
    "max_reconstructibility",
    "parse_graph6",
    "path_graph",
    "recognize_hereditary_class",
    "reconstruct_clique_union",
    "reconstruct_complete_multipartite",
    "reconstruct_components",
    "reconstruct_regular_cutvertex",
    "same_deck_classes",
    "same_deck_pair",
    "spider_graph",
    "star_graph",
    "taylor_threshold",
    "validate_deck",
    "verify_construction",
    "write_graph6",
]
