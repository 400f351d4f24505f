#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "deckforge/deck.hpp"

namespace deckforge {

// Raised when reconstruction from a deck fails: the card data is inconsistent
// with any host, or the method's applicability condition does not hold.
class ReconError : public std::runtime_error {
public:
    explicit ReconError(const std::string& what) : std::runtime_error(what) {}
};

// S_j for j = 0..k-1: the number of (card, vertex) incidences whose vertex
// has degree exactly j inside its card, counted with card multiplicity.
// For a host with degree histogram a_i this equals
//   S_j = sum_i a_i * C(i,j) * C(n-1-i, k-1-j).
std::vector<mpz_class> degree_profile_sums(const Deck& d);

// Largest vertex degree appearing in any card.
int max_card_degree(const Deck& d);

// Recover the host degree histogram a_0..a_{n-1} from profile sums, given
// the histogram entries for every degree i >= k-1 (known_high must contain
// exactly those keys).  Solves the triangular system descending from
// j = k-2; the j = k-1 equation cross-checks known_high, and inexact
// division, negative counts, wrong totals, or an odd degree sum raise
// ReconError.
std::vector<std::uint64_t> solve_degree_list(
    int n, int k, const std::vector<mpz_class>& sums,
    const std::map<int, std::uint64_t>& known_high);

// Host degree sequence, non-increasing, from a deck whose card order
// satisfies k >= max_card_degree + 2.  That bound pins the host maximum
// degree below k-1, so the high entries of the histogram are all zero and
// solve_degree_list applies.
std::vector<int> degree_list_from_deck(const Deck& d);

// Threshold g(l) on the host order: hosts with n >= g(l) have their degree
// list determined by the (n-l)-deck.  Closed form in natural logs,
//   g(l) = (l - ln l + 1) * (e + (e ln l + e + 1) / ((l-1) ln l - 1)) + 1,
// valid once (l-1) ln l > 1 (so l >= 3); smaller l raise domain_error.
long double taylor_threshold(int l);

}  // namespace deckforge
