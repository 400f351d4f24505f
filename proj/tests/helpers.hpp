#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "deckforge/graph.hpp"

namespace testutil {

inline deckforge::Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    deckforge::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline deckforge::Graph permuted(const deckforge::Graph& g, const std::vector<int>& perm) {
    deckforge::Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

// Oracle: isomorphism by exhaustive permutation search.
inline bool brute_isomorphic(const deckforge::Graph& a, const deckforge::Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    int n = a.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = a.has_edge(u, v) ==
                     b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Oracle: count automorphisms by exhaustive permutation search.
inline std::uint64_t brute_automorphisms(const deckforge::Graph& g) {
    int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = g.has_edge(u, v) ==
                     g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Oracle: the code definition taken literally.  Minimum over all vertex
// permutations of the row-major upper-triangle bit string, packed as one
// order byte plus MSB-first data bytes.
inline std::string brute_min_code_bytes(const deckforge::Graph& g) {
    int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> best;
    std::vector<char> bits(static_cast<std::size_t>(n * (n - 1) / 2));
    do {
        std::size_t t = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++t)
                bits[t] = g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])
                              ? '1'
                              : '0';
        if (best.empty() || bits < best) best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::string out(static_cast<std::size_t>(1 + (best.size() + 7) / 8), '\0');
    out[0] = static_cast<char>(static_cast<unsigned char>(n));
    for (std::size_t t = 0; t < best.size(); ++t)
        if (best[t] == '1') out[1 + t / 8] |= static_cast<char>(0x80u >> (t % 8));
    return out;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace testutil
