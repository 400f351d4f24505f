#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "deckforge/deck.hpp"
#include "deckforge/graph.hpp"

namespace deckforge {

// All graphs on n vertices up to isomorphism as packed canonical bits,
// strictly ascending.  Guarded at n <= 10 (12,005,168 graphs).  jobs > 1
// fingerprints extension batches in parallel; the output is identical.
std::vector<std::uint64_t> enumerate_graphs(int n, int jobs = 1);

// Rebuild a graph from packed canonical bits (row-major upper triangle,
// bit t at position 63-t).
Graph graph_from_bits(int n, std::uint64_t bits);

// Compact k-deck for hosts on at most 11 vertices: (canonical bits, count)
// ascending.  Equal vectors mean equal decks.
using SmallDeck = std::vector<std::pair<std::uint64_t, std::uint32_t>>;
SmallDeck small_deck(const Graph& g, int k);

// Byte-compatible with deck_fingerprint(compute_deck(g, k)).
Fingerprint128 small_deck_fingerprint(int n, int k, const SmallDeck& cards);

struct ScanOptions {
    int jobs = 1;                   // worker threads for deck fingerprinting
    std::string checkpoint_dir;     // empty: keep everything in memory
    bool resume = false;            // reuse matching chunk records on disk
    std::size_t chunk_size = 4096;  // graphs per checkpoint chunk
};

struct SameDeckScan {
    int n = 0;
    int k = 0;
    std::uint64_t graph_count = 0;
    // Each class: canonical bits of two or more pairwise non-isomorphic
    // graphs with identical k-decks, ascending; classes ordered by first
    // member.  Fingerprint groups are re-verified with exact decks.
    std::vector<std::vector<std::uint64_t>> classes;
};

SameDeckScan same_deck_classes(int n, int k, const ScanOptions& opts = {});

// Largest l such that the (n-l)-deck of g has no match among other graphs
// on n vertices; equivalently n minus the least k with a unique k-deck.
// Exhaustive over enumerate_graphs(n), so n <= 10.
int max_reconstructibility(const Graph& g, int jobs = 1);

// True when deleting every (l+1)-subset of g yields pairwise
// non-isomorphic cards that are all automorphism-free.  Guarded at n <= 12.
bool check_distinguishing(const Graph& g, int l);

// Card multiset attached to an (l+1)-subset s of the host (l >= 2):
// the l+1 cards deleting each l-subset of s, plus for every pair {u,v} of s
// the card deleting the other l-1 vertices of s together with one fixed
// vertex outside s (the lowest index, or `extra` when >= 0).  C(l+2,2)
// cards of order n-l in Deck form.
Deck sw_card_multiset(const Graph& g, const std::vector<int>& s, int extra = -1);

}  // namespace deckforge
