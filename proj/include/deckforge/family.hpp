#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "deckforge/deck.hpp"
#include "deckforge/degree.hpp"
#include "deckforge/graph.hpp"

namespace deckforge {

enum class HereditaryClass { clique_union, complete_multipartite, neither };

// Classify from the 3-deck (larger decks are reduced first): hosts without
// an induced P_3 are disjoint unions of cliques; hosts without an induced
// K_2+K_1 are complete multipartite.  Hosts lacking both cards (complete or
// edgeless) belong to both classes and report clique_union.
HereditaryClass recognize_hereditary_class(const Deck& d);

// Part sizes (non-increasing) of the complete multipartite host.  Reads
// e_j = number of j-cliques for j = 1..r where r is the largest complete
// card order, requires k >= r+1, and factors
// x^r - e_1 x^{r-1} + ... +- e_r into positive integer roots.  The result
// is certified by a final full-deck comparison.
std::vector<int> reconstruct_complete_multipartite(const Deck& d);

// Clique orders (non-increasing) of a disjoint union of cliques, via the
// complement deck.
std::vector<int> reconstruct_clique_union(const Deck& d);

// Component multiset as (canonical code, multiplicity), sorted by code.
using ComponentMultiset = std::vector<std::pair<CanonicalCode, std::uint64_t>>;

// Components of a host all of whose components fit inside a card.
// Candidates are the connected graphs F on <= k vertices with positive
// Kelly count s_F; multiplicities solve s_F = sum_H s_F(H) c_H along the
// containment order.  Errors when counts go negative or vertex totals
// disagree with n.
ComponentMultiset reconstruct_components(const Deck& d);

// Disjoint union realizing a component multiset.
Graph assemble_components(const ComponentMultiset& parts);

// Leaf blocks (with multiplicities) of an r-regular host read off its deck:
// candidates are connected graphs on r+2..k vertices with no cut vertex and
// exactly one vertex of degree below r, counted by Kelly counts.  The deck
// is first checked against the degree profile of an r-regular host.
ComponentMultiset find_leaf_blocks(const Deck& d, int r);

// Rebuild an r-regular host of connectivity at most 1 from its
// (n-r-1)-deck.  With no leaf blocks the host is disconnected and is
// reassembled from components; otherwise the smallest leaf block B is
// removed, a card H carrying the remaining leaf blocks is located, B is
// reattached at the deficient vertices, and the result is certified by
// full-deck equality.
Graph reconstruct_regular_cutvertex(const Deck& d, int r);

}  // namespace deckforge
