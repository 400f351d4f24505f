#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "deckforge/canonical.hpp"
#include "deckforge/deck.hpp"
#include "deckforge/degree.hpp"
#include "deckforge/family.hpp"
#include "deckforge/graph.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace deckforge;

namespace {

Graph k4_subdivided() {
    // K_4 with one edge subdivided: vertices 0..4, vertex 4 has degree 2.
    return make_graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
}

Graph k33_subdivided() {
    // K_{3,3} with one edge subdivided: vertices 0..6, vertex 6 has degree 2.
    return make_graph(7, {{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4},
                          {2, 5}, {0, 6}, {3, 6}});
}

// Two copies of a near-cubic block glued by a bridge between the degree-2
// vertices; every vertex ends up with degree 3.
Graph cubic_bridge_graph() {
    Graph g = disjoint_union(k4_subdivided(), k4_subdivided());
    g.add_edge(4, 9);
    return g;
}

Graph cubic_two_block_graph() {
    Graph g = disjoint_union(k4_subdivided(), k33_subdivided());
    g.add_edge(4, 11);
    return g;
}

std::uint64_t copies(const Graph& host, const Graph& pattern) {
    return detail::induced_copy_count(host, pattern);
}

ComponentMultiset multiset_of(const std::vector<std::pair<Graph, std::uint64_t>>& parts) {
    ComponentMultiset out;
    for (const auto& [g, cnt] : parts) out.emplace_back(canonical_form(g), cnt);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("hereditary recognition separates clique unions and multipartite hosts") {
    Graph cliques = disjoint_union(complete_graph(3), complete_graph(4));
    CHECK(recognize_hereditary_class(compute_deck(cliques, 3)) == HereditaryClass::clique_union);

    Graph multi = complete_multipartite({7, 4, 3});
    CHECK(recognize_hereditary_class(compute_deck(multi, 3)) ==
          HereditaryClass::complete_multipartite);
    // Larger cards classify identically: the 3-vertex Kelly counts are derived.
    CHECK(recognize_hereditary_class(compute_deck(multi, 4)) ==
          HereditaryClass::complete_multipartite);

    CHECK(recognize_hereditary_class(compute_deck(path_graph(4), 3)) ==
          HereditaryClass::neither);

    // Complete and edgeless hosts belong to both classes; clique_union wins.
    CHECK(recognize_hereditary_class(compute_deck(complete_graph(5), 3)) ==
          HereditaryClass::clique_union);
    CHECK(recognize_hereditary_class(compute_deck(complete_multipartite({5}), 3)) ==
          HereditaryClass::clique_union);

    CHECK_THROWS_AS(recognize_hereditary_class(compute_deck(path_graph(4), 2)), ReconError);
}

TEST_CASE("hereditary recognition agrees with direct induced-subgraph checks") {
    std::mt19937_64 rng(4202);
    const Graph p3 = path_graph(3);
    const Graph k2k1 = disjoint_union(complete_graph(2), complete_graph(1));
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testutil::random_graph(rng, 6, 0.4 + 0.02 * trial);
        HereditaryClass expect = HereditaryClass::neither;
        if (copies(g, p3) == 0)
            expect = HereditaryClass::clique_union;
        else if (copies(g, k2k1) == 0)
            expect = HereditaryClass::complete_multipartite;
        CHECK(recognize_hereditary_class(compute_deck(g, 3)) == expect);
    }
}

TEST_CASE("complete multipartite hosts are rebuilt from clique counts") {
    CHECK(reconstruct_complete_multipartite(compute_deck(complete_multipartite({7, 4, 3}), 4)) ==
          std::vector<int>{7, 4, 3});
    CHECK(reconstruct_complete_multipartite(compute_deck(complete_multipartite({2, 2}), 3)) ==
          std::vector<int>{2, 2});
    CHECK(reconstruct_complete_multipartite(compute_deck(complete_multipartite({5}), 2)) ==
          std::vector<int>{5});
    CHECK(reconstruct_complete_multipartite(
              compute_deck(complete_multipartite({3, 3, 1, 1}), 5)) ==
          std::vector<int>{3, 3, 1, 1});
}

TEST_CASE("multipartite roundtrip sweep: up to four parts, up to twelve vertices") {
    int tested = 0;
    for (int a = 1; a <= 12; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= (b > 0 ? b : 0); ++c)
                for (int dd = 0; dd <= (c > 0 ? c : 0); ++dd) {
                    std::vector<int> parts{a};
                    if (b > 0) parts.push_back(b);
                    if (c > 0) parts.push_back(c);
                    if (dd > 0) parts.push_back(dd);
                    int n = a + b + c + dd;
                    int r = static_cast<int>(parts.size());
                    if (n > 12 || n < r + 1) continue;  // k = r+1 must fit
                    Graph host = complete_multipartite(parts);
                    auto rec = reconstruct_complete_multipartite(compute_deck(host, r + 1));
                    REQUIRE(rec == parts);
                    ++tested;
                }
    CHECK(tested > 100);
}

TEST_CASE("multipartite reconstruction rejects decks outside its reach") {
    // Complete cards of full order leave the number of parts unbounded.
    CHECK_THROWS_AS(reconstruct_complete_multipartite(compute_deck(complete_graph(4), 3)),
                    ReconError);
    // Clique counts of C_5 give x^2 - 5x + 5, which has no integer roots.
    CHECK_THROWS_AS(reconstruct_complete_multipartite(compute_deck(cycle_graph(5), 3)),
                    ReconError);
    // P_4 factors as (x-1)(x-3) but the certification against the deck fails.
    CHECK_THROWS_AS(reconstruct_complete_multipartite(compute_deck(path_graph(4), 4)),
                    ReconError);
}

TEST_CASE("clique unions are rebuilt through the complement deck") {
    Graph host = disjoint_union(disjoint_union(complete_graph(7), complete_graph(4)),
                                complete_graph(3));
    CHECK(reconstruct_clique_union(compute_deck(host, 4)) == std::vector<int>{7, 4, 3});
    CHECK(reconstruct_clique_union(
              compute_deck(disjoint_union(complete_graph(3), complete_graph(3)), 3)) ==
          std::vector<int>{3, 3});
    CHECK(reconstruct_clique_union(
              compute_deck(disjoint_union(complete_graph(2), complete_graph(1)), 3)) ==
          std::vector<int>{2, 1});
}

TEST_CASE("three-vertex cards cannot split seven-four-three from six-six-one-one") {
    // Both hosts have 84 triangles, 240 paths, 40 edgeless cards; four-vertex
    // cards tell them apart.  This pins the k >= r+1 requirement as sharp.
    Deck a3 = compute_deck(complete_multipartite({7, 4, 3}), 3);
    Deck b3 = compute_deck(complete_multipartite({6, 6, 1, 1}), 3);
    CHECK(decks_equal(a3, b3));
    CHECK(count_induced(a3, complete_graph(3)) == 84);
    CHECK(count_induced(a3, path_graph(3)) == 240);
    CHECK(count_induced(a3, complete_multipartite({3})) == 40);
    CHECK_THROWS_AS(reconstruct_complete_multipartite(a3), ReconError);

    Deck a4 = compute_deck(complete_multipartite({7, 4, 3}), 4);
    Deck b4 = compute_deck(complete_multipartite({6, 6, 1, 1}), 4);
    CHECK_FALSE(decks_equal(a4, b4));
    CHECK(reconstruct_complete_multipartite(a4) == std::vector<int>{7, 4, 3});
    // Four parts push the requirement one card size higher.
    CHECK_THROWS_AS(reconstruct_complete_multipartite(b4), ReconError);
    CHECK(reconstruct_complete_multipartite(
              compute_deck(complete_multipartite({6, 6, 1, 1}), 5)) ==
          std::vector<int>{6, 6, 1, 1});
}

TEST_CASE("components are recovered when every component fits inside a card") {
    Graph host = disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)),
                                path_graph(2));
    auto rec = reconstruct_components(compute_deck(host, 6));
    CHECK(rec == multiset_of({{complete_graph(3), 2}, {path_graph(2), 1}}));
    CHECK(is_isomorphic(assemble_components(rec), host));

    Graph host2 = disjoint_union(disjoint_union(path_graph(3), path_graph(3)),
                                 path_graph(2));
    auto rec2 = reconstruct_components(compute_deck(host2, 6));
    CHECK(rec2 == multiset_of({{path_graph(3), 2}, {path_graph(2), 1}}));

    Graph edgeless = complete_multipartite({5});
    CHECK(reconstruct_components(compute_deck(edgeless, 3)) ==
          multiset_of({{complete_graph(1), 5}}));
}

TEST_CASE("component counts satisfy the induced-copy identity") {
    Graph host = disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)),
                                path_graph(2));
    Deck d = compute_deck(host, 6);
    auto rec = reconstruct_components(d);
    // s_F(G) = sum over component types H of s_F(H) * c_H, for connected F.
    for (const Graph& f : {complete_graph(1), complete_graph(2), path_graph(3),
                           complete_graph(3), path_graph(4)}) {
        std::uint64_t total = 0;
        for (const auto& [code, cnt] : rec) total += copies(graph_from_code(code), f) * cnt;
        CHECK(total == count_induced(d, f));
    }
}

TEST_CASE("random unions of small components roundtrip through their decks") {
    std::mt19937_64 rng(99241);
    int done = 0;
    while (done < 15) {
        const int n = 7 + static_cast<int>(rng() % 2);
        const int k = n - 2;
        // Split n into parts of at most k vertices, each a random connected graph.
        Graph host(1);
        bool first = true;
        int left = n;
        while (left > 0) {
            int cap = std::min(left, k);
            int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(cap));
            if (left - size == 1) size = (size < cap) ? size + 1 : size - 1;
            Graph piece(1);
            do {
                piece = testutil::random_graph(rng, size, 0.55);
            } while (components(piece).size() != 1);
            host = first ? piece : disjoint_union(host, piece);
            first = false;
            left -= size;
        }
        if (static_cast<int>(components(host).size()) < 2) continue;
        auto rec = reconstruct_components(compute_deck(host, k));
        REQUIRE(is_isomorphic(assemble_components(rec), host));
        ++done;
    }
}

TEST_CASE("component recovery rejects hosts with oversized components") {
    // K_5 + K_1 seen through 3-vertex cards: the K_2 count goes negative.
    Graph host = disjoint_union(complete_graph(5), complete_graph(1));
    CHECK_THROWS_AS(reconstruct_components(compute_deck(host, 3)), ReconError);
    CHECK_THROWS_AS(reconstruct_components(compute_deck(path_graph(12), 11)),
                    std::invalid_argument);
}

TEST_CASE("leaf blocks of regular hosts are read off the deck") {
    Graph g = cubic_bridge_graph();
    REQUIRE(g.order() == 10);
    for (int v = 0; v < 10; ++v) REQUIRE(g.degree(v) == 3);
    auto leafs = find_leaf_blocks(compute_deck(g, 6), 3);
    CHECK(leafs == multiset_of({{k4_subdivided(), 2}}));

    // 2-regular hosts have no cut vertices, and parity forbids the blocks.
    CHECK(find_leaf_blocks(compute_deck(cycle_graph(6), 3), 2).empty());

    // 2 K_4: cards are too small to hold a block, but the profile gate passes.
    Graph two_k4 = disjoint_union(complete_graph(4), complete_graph(4));
    CHECK(find_leaf_blocks(compute_deck(two_k4, 4), 3).empty());

    // Wrong regularity is caught by the degree profile.
    CHECK_THROWS_AS(find_leaf_blocks(compute_deck(cycle_graph(7), 4), 3), ReconError);
}

TEST_CASE("non-isomorphic leaf blocks are found with their multiplicities") {
    Graph g = cubic_two_block_graph();
    REQUIRE(g.order() == 12);
    for (int v = 0; v < 12; ++v) REQUIRE(g.degree(v) == 3);
    auto leafs = find_leaf_blocks(compute_deck(g, 8), 3);
    CHECK(leafs == multiset_of({{k4_subdivided(), 1}, {k33_subdivided(), 1}}));
}

TEST_CASE("regular hosts with a cut vertex are rebuilt from their deck") {
    Graph g = cubic_bridge_graph();
    Graph rec = reconstruct_regular_cutvertex(compute_deck(g, 6), 3);
    CHECK(is_isomorphic(rec, g));

    Graph g2 = cubic_two_block_graph();
    Graph rec2 = reconstruct_regular_cutvertex(compute_deck(g2, 8), 3);
    CHECK(is_isomorphic(rec2, g2));
}

TEST_CASE("disconnected regular hosts take the component branch") {
    Graph two_k4 = disjoint_union(complete_graph(4), complete_graph(4));
    CHECK(is_isomorphic(reconstruct_regular_cutvertex(compute_deck(two_k4, 4), 3), two_k4));

    Graph cycles = disjoint_union(cycle_graph(4), cycle_graph(5));
    CHECK(is_isomorphic(reconstruct_regular_cutvertex(compute_deck(cycles, 6), 2), cycles));

    Graph triples = disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)),
                                   complete_graph(3));
    CHECK(is_isomorphic(reconstruct_regular_cutvertex(compute_deck(triples, 6), 2), triples));

    CHECK_THROWS_AS(reconstruct_regular_cutvertex(compute_deck(cycles, 6), 3), ReconError);
}
