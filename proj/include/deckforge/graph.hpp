#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deckforge {

// Hard cap: adjacency rows fit one machine word.
inline constexpr int kMaxVertices = 64;

// Simple undirected graph on vertices 0..n-1, no loops, no multi-edges.
// Each row is a 64-bit neighborhood mask; the matrix is kept symmetric
// with a zero diagonal by construction.
class Graph {
public:
    Graph() : n_(1), rows_(1, 0) {}

    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("graph order must be in [1, 64]");
        rows_.assign(static_cast<std::size_t>(n), 0);
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (rows_[static_cast<std::size_t>(u)] >> v & 1u);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    }

    // Neighborhood of v as a bit mask over vertices 0..n-1.
    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return rows_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const;
    int edge_count() const;

    // Degrees of all vertices, indexed by vertex.
    std::vector<int> degrees() const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    }

    int n_;
    std::vector<std::uint64_t> rows_;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

// Named generators used throughout: paths/cycles by vertex count, stars by
// leaf count, complete multipartite by part sizes, spiders by leg lengths,
// star forests by (multiplicity, leaf count) pairs.
Graph path_graph(int n);           // P_n, n >= 1 vertices
Graph cycle_graph(int n);          // C_n, n >= 3
Graph complete_graph(int n);       // K_n, n >= 1
Graph star_graph(int leaves);      // K_{1,m}, m >= 0 (m = 0 gives K_1)
Graph complete_multipartite(const std::vector<int>& parts);
Graph spider_graph(int a, int b, int c);  // three legs of given lengths >= 1
Graph star_forest(const std::vector<std::pair<int, int>>& mult_and_leaves);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Induced subgraph on the given vertices; vertex i of the result is keep[i].
// Vertices must be distinct, in range, and nonempty.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

enum class ConnectivityClass { disconnected, connected_with_cut_vertex, two_connected };

ConnectivityClass connectivity_class(const Graph& g);

const char* to_string(ConnectivityClass c);

// Components as vertex sets, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

// Blocks are maximal 2-connected subgraphs, bridges, or an isolated vertex.
// A block is a leaf when it contains at most one cut vertex.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // vertex sets, each sorted
    std::vector<int> cut_vertices;         // sorted
    std::vector<bool> is_leaf_block;       // parallel to blocks
};

// Requires a connected graph.
BlockDecomposition block_decomposition(const Graph& g);

}  // namespace deckforge
