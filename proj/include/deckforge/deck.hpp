#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deckforge/canonical.hpp"
#include "deckforge/graph.hpp"

namespace deckforge {

// Raised when a deck fails a structural requirement (impossible counts,
// failed divisibility, malformed serialized form, ...).
class DeckError : public std::runtime_error {
public:
    explicit DeckError(const std::string& what) : std::runtime_error(what) {}
};

// Multiset of k-vertex cards of an n-vertex host, keyed by canonical code and
// kept sorted by code.  A complete deck has total multiplicity C(n,k);
// partial multisets (common-card selections) use the same container.
struct Deck {
    int n = 0;
    int k = 0;
    std::vector<std::pair<CanonicalCode, std::uint64_t>> cards;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& c : cards) t += c.second;
        return t;
    }

    // Multiplicity of one card, zero when absent.
    std::uint64_t count_of(const CanonicalCode& code) const;

    bool operator==(const Deck& o) const { return n == o.n && k == o.k && cards == o.cards; }
};

struct Fingerprint128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    bool operator==(const Fingerprint128& o) const { return hi == o.hi && lo == o.lo; }
    bool operator<(const Fingerprint128& o) const {
        return hi != o.hi ? hi < o.hi : lo < o.lo;
    }
    std::string hex() const;
};

// Exact binomial coefficient; requires 0 <= n <= 64 (any k).
std::uint64_t binomial(int n, int k);

// The multiset of all C(n,k) induced k-vertex subgraphs up to isomorphism.
Deck compute_deck(const Graph& g, int k);

bool decks_equal(const Deck& a, const Deck& b);

// The (k-1)-deck derived from a k-deck: aggregate the (k-1)-subsets of every
// card, then divide each multiplicity by n-k+1.  A divisibility failure means
// the input is not a deck.
Deck derive_subdeck(const Deck& d);

// Deck of the complement host: complement every card.
Deck deck_complement(const Deck& d);

// Number of induced copies of F in the host, recovered from the deck:
// total copies over cards divided by C(n-p, k-p).  Requires |V(F)| <= k.
std::uint64_t count_induced(const Deck& d, const Graph& f);

// Cardwise minimum of two same-k decks.  The result keeps the left host
// order; when the hosts differ it is a partial multiset, not a deck.
Deck deck_common(const Deck& a, const Deck& b);

struct DeckValidation {
    bool ok = false;
    std::string reason;  // empty when ok
};

// Structural validity: card orders match k, multiplicities positive, cards
// sorted and unique, total C(n,k), and the derivation chain down to 1-vertex
// cards divides exactly at every step.
DeckValidation validate_deck(const Deck& d);

Fingerprint128 deck_fingerprint(const Deck& d);

// JSON form {"n":..,"k":..,"cards":[{"g6":..,"count":..},..]} with cards
// sorted ascending by graph6 string; serialization is bit-exact across runs.
std::string deck_to_json(const Deck& d);
Deck deck_from_json(const std::string& text);

namespace detail {

// Two-lane byte hasher behind Fingerprint128.
struct Fp128Hasher {
    std::uint64_t h1 = 0xcbf29ce484222325ull;
    std::uint64_t h2 = 0x9e3779b97f4a7c15ull;

    void byte(unsigned char b) {
        h1 = (h1 ^ b) * 0x100000001b3ull;
        h2 = (h2 ^ b) * 0xc6a4a7935bd1e995ull;
        h2 ^= h2 >> 29;
    }
    void bytes(const void* data, std::size_t len) {
        auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) byte(p[i]);
    }
    void u64le(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) byte(static_cast<unsigned char>(v >> (8 * i)));
    }
    Fingerprint128 finish() const;
};

// Iterate all k-subsets of 0..n-1 in lexicographic order; f gets a pointer to
// k sorted ints.
template <class F>
void for_each_subset(int n, int k, F&& f) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        f(idx.data());
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Induced copies of a p-vertex pattern inside one small host graph.
std::uint64_t induced_copy_count(const Graph& host, const Graph& pattern);

}  // namespace detail

}  // namespace deckforge

template <>
struct std::hash<deckforge::Fingerprint128> {
    std::size_t operator()(const deckforge::Fingerprint128& f) const noexcept {
        return static_cast<std::size_t>(f.hi ^ (f.lo * 0x9e3779b97f4a7c15ull));
    }
};
