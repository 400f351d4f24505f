#pragma once

#include <string>
#include <vector>

#include "deckforge/deck.hpp"
#include "deckforge/graph.hpp"

namespace deckforge {

enum class Family {
    cycle_split,
    cycle_path,
    path_shift,
    maxdeg2_general,
    spider_pair,
    cycle_vs_spider,
    manvel_stars,
    erpart_pair,
    path_vs_cycle_path,
    myrvold_common,
};

const char* to_string(Family f);
Family family_from_string(const std::string& name);

// Parameter layout by family; k is the claimed deck size (pass 0 to take the
// family's fixed value where one exists):
//   cycle_split        {q, r}     C_{q+r} vs C_q + C_r            q, r >= k+1
//   cycle_path         {q, r}     P_{q+r} vs C_q + P_r            q >= k+1, r >= k-1
//   path_shift         {q, r}     P_{q-1}+P_r vs P_q+P_{r-1}      q, r >= k
//   maxdeg2_general    signed component list, one 0 separating the two hosts;
//                      +v is the cycle C_v, -v the path P_v.  Bounds: cycles
//                      >= k+1, paths >= k-1, equal vertex and edge totals.
//   spider_pair        {}         S_{k-1,k-1,1} vs S_{k,k-2,1}    k >= 3
//   cycle_vs_spider    {a, b, c}  C_t + K_1 vs S_{a,b,c}, t = a+b+c >= 4; k = 3
//   manvel_stars       {}         star forests with max degree k vs k-1,
//                                 order (k+2) 2^{k-2}; 2 <= k <= 5
//   erpart_pair        {}         K_{7,4,3} vs K_{6,6,1,1}; k = 3
//   path_vs_cycle_path {}         P_{2k} vs C_{k+1} + P_{k-1}     k >= 2
//   myrvold_common     {t}        K_{t,t} vs K_{t+1,t-1}, k = 2t-1; t >= 2
struct FamilySpec {
    Family family;
    std::vector<int> params;
    int k = 0;
};

struct SameDeckPair {
    Graph g;
    Graph h;
    int k;
};

// Build the family instance with full bound checking; violations raise
// std::invalid_argument.
SameDeckPair same_deck_pair(const FamilySpec& spec);

// Check the family's claim exactly: equal k-decks and non-isomorphic graphs
// (myrvold_common instead needs at least t+1 common cards).  Bounds are NOT
// enforced here, so sharpness of the stated ranges can be probed; structurally
// unbuildable input also yields false.  On false, *diagnostic says why.
bool verify_construction(const FamilySpec& spec, std::string* diagnostic = nullptr);

}  // namespace deckforge
