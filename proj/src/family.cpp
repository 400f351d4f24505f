#include "deckforge/family.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "deckforge/canonical.hpp"
#include "deckforge/search.hpp"

namespace deckforge {

namespace {

constexpr int kEnumLimit = 10;  // enumerate_graphs ceiling

mpz_class mpz_binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

// Exactly one vertex short of degree r, none above, no cut vertex.
bool near_regular_block_shape(const Graph& g, int r) {
    if (connectivity_class(g) != ConnectivityClass::two_connected) return false;
    int deficient = 0;
    for (int deg : g.degrees()) {
        if (deg > r) return false;
        if (deg < r) ++deficient;
    }
    return deficient == 1;
}

int unique_deficient_vertex(const Graph& g, int r) {
    int found = -1;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < r) {
            if (found >= 0) return -1;
            found = v;
        }
    return found;
}

// Glue b onto h, identifying b's vertex bv with h's vertex hv.
Graph merge_at(const Graph& h, int hv, const Graph& b, int bv) {
    Graph g(h.order() + b.order() - 1);
    for (auto [u, v] : h.edges()) g.add_edge(u, v);
    std::vector<int> map(static_cast<std::size_t>(b.order()));
    int next = h.order();
    for (int w = 0; w < b.order(); ++w)
        map[static_cast<std::size_t>(w)] = (w == bv) ? hv : next++;
    for (auto [u, v] : b.edges())
        g.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
    return g;
}

// Leaf blocks of h that look like leaf blocks of an r-regular host: exactly
// one vertex of block-degree below r.  Blocks whose attachment lost edges on
// both sides (bridges between interior blocks, blocks that were interior in
// the host) show two or more deficient vertices and are dropped.
ComponentMultiset filtered_leaf_blocks(const Graph& h, int r) {
    ComponentMultiset out;
    BlockDecomposition bd = block_decomposition(h);
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        if (!bd.is_leaf_block[i]) continue;
        Graph blk = induced_subgraph(h, bd.blocks[i]);
        int deficient = 0;
        bool ok = true;
        for (int deg : blk.degrees()) {
            if (deg > r) ok = false;
            if (deg < r) ++deficient;
        }
        if (!ok || deficient != 1) continue;
        out.emplace_back(canonical_form(blk), 1);
    }
    std::sort(out.begin(), out.end());
    ComponentMultiset merged;
    for (auto& [code, cnt] : out) {
        if (!merged.empty() && merged.back().first == code)
            merged.back().second += cnt;
        else
            merged.emplace_back(code, cnt);
    }
    return merged;
}

}  // namespace

HereditaryClass recognize_hereditary_class(const Deck& d) {
    if (d.k < 3)
        throw ReconError("recognize_hereditary_class: needs cards on at least 3 vertices");
    // Kelly counts of the two forbidden 3-vertex patterns; positive exactly
    // when the derived 3-deck carries the card.
    const Graph p3 = path_graph(3);
    const Graph k2_plus_k1 = disjoint_union(complete_graph(2), complete_graph(1));
    if (count_induced(d, p3) == 0) return HereditaryClass::clique_union;
    if (count_induced(d, k2_plus_k1) == 0) return HereditaryClass::complete_multipartite;
    return HereditaryClass::neither;
}

std::vector<int> reconstruct_complete_multipartite(const Deck& d) {
    // r = largest clique order witnessed by the deck; needs k >= r+1 so the
    // deck certifies no larger clique exists.
    int r = 0;
    std::vector<mpz_class> e(static_cast<std::size_t>(d.k) + 1);
    e[0] = 1;
    for (int j = 1; j <= d.k; ++j) {
        std::uint64_t s = count_induced(d, complete_graph(j));
        e[static_cast<std::size_t>(j)] = mpz_class(static_cast<unsigned long>(s));
        if (s > 0) r = j;
    }
    if (r >= d.k)
        throw ReconError(
            "reconstruct_complete_multipartite: cards too small to bound the "
            "number of parts (complete card of full order present)");

    // Part sizes are the roots of x^r - e_1 x^{r-1} + e_2 x^{r-2} - ... ; peel
    // positive integer roots by trial and synthetic division.
    std::vector<mpz_class> coef(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j <= r; ++j) {
        coef[static_cast<std::size_t>(r - j)] = e[static_cast<std::size_t>(j)];
        if (j % 2) coef[static_cast<std::size_t>(r - j)] = -coef[static_cast<std::size_t>(r - j)];
    }
    std::vector<int> parts;
    int deg = r;
    int t = 1;
    while (deg > 0) {
        bool found = false;
        for (; t <= d.n; ++t) {
            // Horner evaluation at t.
            mpz_class val = coef[static_cast<std::size_t>(deg)];
            for (int i = deg - 1; i >= 0; --i)
                val = val * t + coef[static_cast<std::size_t>(i)];
            if (val == 0) {
                found = true;
                break;
            }
        }
        if (!found)
            throw ReconError(
                "reconstruct_complete_multipartite: clique counts do not factor "
                "into positive integer part sizes");
        std::vector<mpz_class> next(static_cast<std::size_t>(deg));
        next[static_cast<std::size_t>(deg - 1)] = coef[static_cast<std::size_t>(deg)];
        for (int i = deg - 1; i >= 1; --i)
            next[static_cast<std::size_t>(i - 1)] =
                coef[static_cast<std::size_t>(i)] + t * next[static_cast<std::size_t>(i)];
        coef = std::move(next);
        parts.push_back(t);
        --deg;
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());

    Graph host = complete_multipartite(parts);
    if (host.order() != d.n || !decks_equal(compute_deck(host, d.k), d))
        throw ReconError(
            "reconstruct_complete_multipartite: deck is not that of a complete "
            "multipartite graph");
    return parts;
}

std::vector<int> reconstruct_clique_union(const Deck& d) {
    return reconstruct_complete_multipartite(deck_complement(d));
}

ComponentMultiset reconstruct_components(const Deck& d) {
    if (d.k > kEnumLimit)
        throw std::invalid_argument(
            "reconstruct_components: cards larger than the enumeration limit (10)");

    struct Cand {
        Graph g;
        CanonicalCode code;
        std::uint64_t s;
        int depth = 0;
    };
    std::vector<Cand> cands;
    for (int p = 1; p <= d.k; ++p)
        for (std::uint64_t bits : enumerate_graphs(p)) {
            Graph f = graph_from_bits(p, bits);
            if (components(f).size() != 1) continue;
            std::uint64_t s = count_induced(d, f);
            if (s > 0) cands.push_back({f, code_from_bits(p, bits), s, 0});
        }

    // Copies of F inside each strictly larger candidate; cnt[i][j] = copies
    // of candidate j inside candidate i.
    const std::size_t m = cands.size();
    std::vector<std::vector<std::uint64_t>> cnt(m, std::vector<std::uint64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j || cands[j].g.order() >= cands[i].g.order()) continue;
            cnt[i][j] = detail::induced_copy_count(cands[i].g, cands[j].g);
        }

    // Depth = longest strict containment chain upward; maximal candidates sit
    // at depth 0 and are exactly the components seen whole.
    std::vector<std::size_t> by_size_desc(m);
    for (std::size_t i = 0; i < m; ++i) by_size_desc[i] = i;
    std::sort(by_size_desc.begin(), by_size_desc.end(), [&](std::size_t a, std::size_t b) {
        return cands[a].g.order() > cands[b].g.order();
    });
    for (std::size_t j : by_size_desc)
        for (std::size_t i = 0; i < m; ++i)
            if (cnt[i][j] > 0 && cands[i].depth + 1 > cands[j].depth)
                cands[j].depth = cands[i].depth + 1;

    std::vector<std::size_t> order(by_size_desc);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cands[a].depth < cands[b].depth;
    });

    // s_F = sum over component types H of s_F(H) * c_H; every H properly
    // containing F has smaller depth, so peel multiplicities depth by depth.
    std::vector<std::int64_t> c(m, 0);
    for (std::size_t f : order) {
        __int128 acc = static_cast<__int128>(cands[f].s);
        for (std::size_t h = 0; h < m; ++h) {
            if (h == f) continue;
            acc -= static_cast<__int128>(cnt[h][f]) * c[h];
        }
        if (acc < 0)
            throw ReconError(
                "reconstruct_components: negative multiplicity; some component "
                "does not fit inside a card");
        if (acc > static_cast<__int128>(INT64_MAX))
            throw ReconError("reconstruct_components: multiplicity overflow");
        c[f] = static_cast<std::int64_t>(acc);
    }

    __int128 total = 0;
    for (std::size_t i = 0; i < m; ++i)
        total += static_cast<__int128>(c[i]) * cands[i].g.order();
    if (total != d.n)
        throw ReconError(
            "reconstruct_components: component orders do not add up to the host "
            "order; some component does not fit inside a card");

    ComponentMultiset out;
    for (std::size_t i = 0; i < m; ++i)
        if (c[i] > 0)
            out.emplace_back(cands[i].code, static_cast<std::uint64_t>(c[i]));
    std::sort(out.begin(), out.end());
    return out;
}

Graph assemble_components(const ComponentMultiset& parts) {
    if (parts.empty()) throw std::invalid_argument("assemble_components: empty multiset");
    Graph acc;
    bool first = true;
    for (const auto& [code, cnt] : parts) {
        if (cnt == 0) throw std::invalid_argument("assemble_components: zero multiplicity");
        Graph piece = graph_from_code(code);
        for (std::uint64_t i = 0; i < cnt; ++i) {
            if (first) {
                acc = piece;
                first = false;
            } else {
                acc = disjoint_union(acc, piece);
            }
        }
    }
    return acc;
}

ComponentMultiset find_leaf_blocks(const Deck& d, int r) {
    if (r < 0 || r >= d.n)
        throw std::invalid_argument("find_leaf_blocks: degree out of range");

    // Gate: an r-regular host has degree profile sums
    // S_j = n C(r,j) C(n-1-r, k-1-j); this holds at every k, unlike full
    // degree-list recovery which needs k >= r+2.
    std::vector<mpz_class> sums = degree_profile_sums(d);
    for (int j = 0; j <= d.k - 1; ++j) {
        mpz_class expect = mpz_class(d.n) * mpz_binom(r, j) *
                           mpz_binom(d.n - 1 - r, d.k - 1 - j);
        if (sums[static_cast<std::size_t>(j)] != expect)
            throw ReconError("find_leaf_blocks: degree profile is not r-regular");
    }

    ComponentMultiset out;
    if (r + 2 > d.k) return out;  // no block fits inside a card
    if (d.k > kEnumLimit)
        throw std::invalid_argument(
            "find_leaf_blocks: cards larger than the enumeration limit (10)");
    for (int p = r + 2; p <= d.k; ++p)
        for (std::uint64_t bits : enumerate_graphs(p)) {
            Graph b = graph_from_bits(p, bits);
            if (!near_regular_block_shape(b, r)) continue;
            std::uint64_t s = count_induced(d, b);
            if (s > 0) out.emplace_back(code_from_bits(p, bits), s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Graph reconstruct_regular_cutvertex(const Deck& d, int r) {
    ComponentMultiset leafs = find_leaf_blocks(d, r);
    if (leafs.empty()) {
        // No cut vertex anywhere, so the host is disconnected; each component
        // has at most n-(r+1) <= k vertices and Kelly counts see all of them.
        return assemble_components(reconstruct_components(d));
    }

    // Detach the smallest leaf block B (codes order by vertex count first).
    const CanonicalCode bcode = leafs.front().first;
    Graph b = graph_from_code(bcode);
    const int s = b.order();
    const int bdef = unique_deficient_vertex(b, r);
    if (bdef < 0)
        throw ReconError("reconstruct_regular_cutvertex: malformed leaf block");

    ComponentMultiset goal = leafs;
    if (--goal.front().second == 0) goal.erase(goal.begin());

    // G minus the interior of B survives as a card on n-s+1 vertices.
    const int kp = d.n - s + 1;
    if (kp > d.k)
        throw ReconError("reconstruct_regular_cutvertex: leaf block too large for cards");
    Deck dp = d;
    while (dp.k > kp) dp = derive_subdeck(dp);

    for (const auto& [code, cnt] : dp.cards) {
        Graph h = graph_from_code(code);
        if (components(h).size() != 1) continue;
        const int hdef = unique_deficient_vertex(h, r);
        if (hdef < 0) continue;
        bool bounded = true;
        for (int deg : h.degrees())
            if (deg > r) bounded = false;
        if (!bounded) continue;
        if (filtered_leaf_blocks(h, r) != goal) continue;
        Graph g2 = merge_at(h, hdef, b, bdef);
        if (decks_equal(compute_deck(g2, d.k), d)) return g2;
    }
    throw ReconError(
        "reconstruct_regular_cutvertex: no card completes a host with the "
        "observed deck");
}

}  // namespace deckforge
