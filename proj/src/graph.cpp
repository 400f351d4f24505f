#include "deckforge/graph.hpp"

#include <algorithm>
#include <bit>

namespace deckforge {

int Graph::degree(int v) const {
    return std::popcount(neighbors(v));
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[static_cast<std::size_t>(v)]);
    return twice / 2;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t m = rows_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        while (m) {
            int v = std::countr_zero(m);
            out.emplace_back(u, v);
            m &= m - 1;
        }
    }
    return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    Graph g(n);
    for (auto [u, v] : edge_list) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star needs a nonnegative leaf count");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("need at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
        n += p;
    }
    Graph g(n);
    int a_begin = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int a_end = a_begin + parts[i];
        int b_begin = a_end;
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            int b_end = b_begin + parts[j];
            for (int u = a_begin; u < a_end; ++u)
                for (int v = b_begin; v < b_end; ++v) g.add_edge(u, v);
            b_begin = b_end;
        }
        a_begin = a_end;
    }
    return g;
}

Graph spider_graph(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("spider legs must have length >= 1");
    Graph g(a + b + c + 1);
    int next = 1;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

Graph star_forest(const std::vector<std::pair<int, int>>& mult_and_leaves) {
    if (mult_and_leaves.empty()) throw std::invalid_argument("need at least one star");
    bool first = true;
    Graph g(1);
    for (auto [mult, leaves] : mult_and_leaves) {
        if (mult < 1) throw std::invalid_argument("star multiplicity must be positive");
        for (int i = 0; i < mult; ++i) {
            if (first) {
                g = star_graph(leaves);
                first = false;
            } else {
                g = disjoint_union(g, star_graph(leaves));
            }
        }
    }
    return g;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    if (n > kMaxVertices) throw std::invalid_argument("union exceeds 64 vertices");
    Graph g(n);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    int off = a.order();
    for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("induced subgraph needs at least one vertex");
    std::uint64_t seen = 0;
    for (int v : keep) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
        if (seen >> v & 1u) throw std::invalid_argument("duplicate vertex");
        seen |= std::uint64_t{1} << v;
    }
    int k = static_cast<int>(keep.size());
    Graph h(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]))
                h.add_edge(i, j);
    return h;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.order();
    std::uint64_t unvisited = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::vector<int>> out;
    while (unvisited) {
        int start = std::countr_zero(unvisited);
        std::uint64_t comp = std::uint64_t{1} << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        std::vector<int> verts;
        std::uint64_t c = comp;
        while (c) {
            verts.push_back(std::countr_zero(c));
            c &= c - 1;
        }
        out.push_back(std::move(verts));
        unvisited &= ~comp;
    }
    return out;
}

namespace {

// Hopcroft-Tarjan articulation points and biconnected components.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    std::vector<bool> is_cut;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.order()), -1),
          low(static_cast<std::size_t>(graph.order()), 0),
          parent(static_cast<std::size_t>(graph.order()), -1),
          is_cut(static_cast<std::size_t>(graph.order()), false) {}

    void pop_block(int u, int v) {
        std::uint64_t verts = 0;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts |= std::uint64_t{1} << a;
            verts |= std::uint64_t{1} << b;
            if (a == u && b == v) break;
        }
        std::vector<int> block;
        while (verts) {
            block.push_back(std::countr_zero(verts));
            verts &= verts - 1;
        }
        blocks.push_back(std::move(block));
    }

    void dfs(int u) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        int children = 0;
        std::uint64_t m = g.neighbors(u);
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (disc[static_cast<std::size_t>(v)] < 0) {
                ++children;
                parent[static_cast<std::size_t>(v)] = u;
                edge_stack.emplace_back(u, v);
                dfs(v);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
                    if (parent[static_cast<std::size_t>(u)] >= 0 || children > 1)
                        is_cut[static_cast<std::size_t>(u)] = true;
                    pop_block(u, v);
                }
            } else if (v != parent[static_cast<std::size_t>(u)] &&
                       disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
                edge_stack.emplace_back(u, v);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
            }
        }
    }
};

}  // namespace

ConnectivityClass connectivity_class(const Graph& g) {
    if (components(g).size() > 1) return ConnectivityClass::disconnected;
    if (g.order() <= 2) return ConnectivityClass::two_connected;
    BlockFinder bf(g);
    bf.dfs(0);
    for (bool c : bf.is_cut)
        if (c) return ConnectivityClass::connected_with_cut_vertex;
    return ConnectivityClass::two_connected;
}

const char* to_string(ConnectivityClass c) {
    switch (c) {
        case ConnectivityClass::disconnected: return "disconnected";
        case ConnectivityClass::connected_with_cut_vertex: return "connected_with_cut_vertex";
        case ConnectivityClass::two_connected: return "two_connected";
    }
    return "unknown";
}

BlockDecomposition block_decomposition(const Graph& g) {
    if (components(g).size() > 1)
        throw std::invalid_argument("block decomposition requires a connected graph");
    BlockDecomposition out;
    if (g.order() == 1) {
        out.blocks.push_back({0});
        out.is_leaf_block.push_back(true);
        return out;
    }
    BlockFinder bf(g);
    bf.dfs(0);
    out.blocks = std::move(bf.blocks);
    std::sort(out.blocks.begin(), out.blocks.end());
    for (int v = 0; v < g.order(); ++v)
        if (bf.is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
    out.is_leaf_block.reserve(out.blocks.size());
    for (const auto& block : out.blocks) {
        int cuts = 0;
        for (int v : block)
            if (bf.is_cut[static_cast<std::size_t>(v)]) ++cuts;
        out.is_leaf_block.push_back(cuts <= 1);
    }
    return out;
}

}  // namespace deckforge
