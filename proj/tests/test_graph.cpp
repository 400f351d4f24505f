#include "doctest.h"

#include <algorithm>

#include "deckforge/graph.hpp"

using namespace deckforge;

TEST_CASE("basic construction and edge bookkeeping") {
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degrees() == std::vector<int>{1, 2, 2, 1});
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("generators") {
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(star_graph(0).order() == 1);
    CHECK(star_graph(4).degrees() == std::vector<int>{4, 1, 1, 1, 1});

    Graph k23 = complete_multipartite({2, 3});
    CHECK(k23.order() == 5);
    CHECK(k23.edge_count() == 6);
    auto deg = k23.degrees();
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<int>{2, 2, 2, 3, 3});

    Graph k1 = complete_multipartite({4});
    CHECK(k1.edge_count() == 0);

    Graph sp = spider_graph(2, 1, 1);
    CHECK(sp.order() == 5);
    CHECK(sp.degree(0) == 3);
    auto sdeg = sp.degrees();
    std::sort(sdeg.begin(), sdeg.end());
    CHECK(sdeg == std::vector<int>{1, 1, 1, 2, 3});

    Graph sf = star_forest({{3, 2}, {1, 0}});
    CHECK(sf.order() == 10);
    CHECK(sf.edge_count() == 6);
}

TEST_CASE("complement and union") {
    Graph c5 = cycle_graph(5);
    CHECK(complement(complement(c5)) == c5);
    CHECK(complement(complete_graph(4)).edge_count() == 0);
    Graph u = disjoint_union(complete_graph(3), path_graph(2));
    CHECK(u.order() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(!u.has_edge(0, 3));
}

TEST_CASE("induced subgraphs") {
    Graph c6 = cycle_graph(6);
    Graph h = induced_subgraph(c6, {0, 1, 2, 3});
    CHECK(h.order() == 4);
    CHECK(h.edge_count() == 3);
    CHECK_THROWS_AS(induced_subgraph(c6, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subgraph(c6, {}), std::invalid_argument);
}

TEST_CASE("connectivity classes") {
    CHECK(connectivity_class(cycle_graph(6)) == ConnectivityClass::two_connected);
    CHECK(connectivity_class(path_graph(4)) == ConnectivityClass::connected_with_cut_vertex);
    CHECK(connectivity_class(disjoint_union(path_graph(2), path_graph(2))) ==
          ConnectivityClass::disconnected);
    CHECK(connectivity_class(Graph(1)) == ConnectivityClass::two_connected);
    CHECK(connectivity_class(path_graph(2)) == ConnectivityClass::two_connected);
    CHECK(connectivity_class(star_graph(3)) == ConnectivityClass::connected_with_cut_vertex);
}

TEST_CASE("components") {
    Graph g = disjoint_union(disjoint_union(complete_graph(3), Graph(1)), path_graph(2));
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3});
    CHECK(comps[2] == std::vector<int>{4, 5});
}

TEST_CASE("block decomposition of a path") {
    auto bd = block_decomposition(path_graph(4));
    REQUIRE(bd.blocks.size() == 3);
    CHECK(bd.cut_vertices == std::vector<int>{1, 2});
    // End blocks are leaves, the middle one is not.
    int leaves = 0;
    for (bool f : bd.is_leaf_block) leaves += f ? 1 : 0;
    CHECK(leaves == 2);
}

TEST_CASE("block decomposition of a bowtie") {
    // Two triangles sharing vertex 0.
    Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    auto bd = block_decomposition(g);
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == std::vector<int>{0});
    CHECK(bd.is_leaf_block == std::vector<bool>{true, true});
    CHECK(bd.blocks[0] == std::vector<int>{0, 1, 2});
    CHECK(bd.blocks[1] == std::vector<int>{0, 3, 4});
}

TEST_CASE("block decomposition of two-connected and tiny graphs") {
    auto bd = block_decomposition(cycle_graph(6));
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].size() == 6);
    CHECK(bd.cut_vertices.empty());
    CHECK(bd.is_leaf_block[0]);

    auto single = block_decomposition(Graph(1));
    REQUIRE(single.blocks.size() == 1);
    CHECK(single.blocks[0] == std::vector<int>{0});

    CHECK_THROWS_AS(block_decomposition(disjoint_union(Graph(1), Graph(1))),
                    std::invalid_argument);
}
