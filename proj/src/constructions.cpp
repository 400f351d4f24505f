#include "deckforge/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deckforge/canonical.hpp"

namespace deckforge {

namespace {

struct BuiltPair {
    Graph g;
    Graph h;
    int k = 0;
    int myrvold_t = 0;
};

[[noreturn]] void fail(Family f, const std::string& why) {
    throw std::invalid_argument(std::string(to_string(f)) + ": " + why);
}

void need_params(const FamilySpec& s, std::size_t count) {
    if (s.params.size() != count)
        fail(s.family, "expected " + std::to_string(count) + " parameter(s), got " +
                           std::to_string(s.params.size()));
}

int fixed_k(const FamilySpec& s, int value) {
    if (s.k != 0 && s.k != value)
        fail(s.family, "deck size is fixed at " + std::to_string(value));
    return value;
}

int free_k(const FamilySpec& s, int lo) {
    if (s.k < lo) fail(s.family, "needs k >= " + std::to_string(lo));
    return s.k;
}

void check_order(Family f, int n) {
    if (n > kMaxVertices) fail(f, "output exceeds " + std::to_string(kMaxVertices) + " vertices");
}

// One host of a maxdeg2_general spec: +v cycle, -v path.
Graph maxdeg2_host(Family f, const std::vector<int>& comps) {
    if (comps.empty()) fail(f, "each side of the separator needs a component");
    int total = 0;
    for (int e : comps) {
        if (e == 0 || (e > 0 && e < 3)) fail(f, "cycle components need at least 3 vertices");
        total += (e > 0) ? e : -e;
    }
    check_order(f, total);
    Graph g(1);
    bool first = true;
    for (int e : comps) {
        Graph piece = (e > 0) ? cycle_graph(e) : path_graph(-e);
        g = first ? piece : disjoint_union(g, piece);
        first = false;
    }
    return g;
}

// Structural construction only; range bounds are checked separately so that
// verify_construction can probe out-of-range instances.
BuiltPair build_pair(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::cycle_split: {
            need_params(spec, 2);
            const int q = spec.params[0], r = spec.params[1];
            if (q < 3 || r < 3) fail(spec.family, "cycles need at least 3 vertices");
            check_order(spec.family, q + r);
            return {cycle_graph(q + r), disjoint_union(cycle_graph(q), cycle_graph(r)),
                    free_k(spec, 1)};
        }
        case Family::cycle_path: {
            need_params(spec, 2);
            const int q = spec.params[0], r = spec.params[1];
            if (q < 3) fail(spec.family, "cycle needs at least 3 vertices");
            if (r < 1) fail(spec.family, "path needs at least 1 vertex");
            check_order(spec.family, q + r);
            return {path_graph(q + r), disjoint_union(cycle_graph(q), path_graph(r)),
                    free_k(spec, 1)};
        }
        case Family::path_shift: {
            need_params(spec, 2);
            const int q = spec.params[0], r = spec.params[1];
            if (q < 2 || r < 2) fail(spec.family, "needs q, r >= 2 to form both paths");
            check_order(spec.family, q + r - 1);
            return {disjoint_union(path_graph(q - 1), path_graph(r)),
                    disjoint_union(path_graph(q), path_graph(r - 1)), free_k(spec, 1)};
        }
        case Family::maxdeg2_general: {
            auto sep = std::find(spec.params.begin(), spec.params.end(), 0);
            if (sep == spec.params.end()) fail(spec.family, "missing 0 separator");
            std::vector<int> left(spec.params.begin(), sep);
            std::vector<int> right(sep + 1, spec.params.end());
            if (std::find(right.begin(), right.end(), 0) != right.end())
                fail(spec.family, "more than one 0 separator");
            return {maxdeg2_host(spec.family, left), maxdeg2_host(spec.family, right),
                    free_k(spec, 1)};
        }
        case Family::spider_pair: {
            need_params(spec, 0);
            const int k = free_k(spec, 3);
            check_order(spec.family, 2 * k);
            return {spider_graph(k - 1, k - 1, 1), spider_graph(k, k - 2, 1), k};
        }
        case Family::cycle_vs_spider: {
            need_params(spec, 3);
            const int a = spec.params[0], b = spec.params[1], c = spec.params[2];
            if (a < 1 || b < 1 || c < 1) fail(spec.family, "legs must be positive");
            const int t = a + b + c;
            if (t < 3) fail(spec.family, "cycle needs at least 3 vertices");
            check_order(spec.family, t + 1);
            return {disjoint_union(cycle_graph(t), complete_graph(1)), spider_graph(a, b, c),
                    fixed_k(spec, 3)};
        }
        case Family::manvel_stars: {
            need_params(spec, 0);
            const int k = free_k(spec, 2);
            if (k > 5) fail(spec.family, "output exceeds 64 vertices for k > 5");
            std::vector<std::pair<int, int>> gs, hs;
            for (int i = 0; 2 * i <= k; ++i)
                gs.emplace_back(static_cast<int>(binomial(k, 2 * i)), k - 2 * i);
            for (int i = 0; 2 * i + 1 <= k; ++i)
                hs.emplace_back(static_cast<int>(binomial(k, 2 * i + 1)), k - 1 - 2 * i);
            return {star_forest(gs), star_forest(hs), k};
        }
        case Family::erpart_pair: {
            need_params(spec, 0);
            return {complete_multipartite({7, 4, 3}), complete_multipartite({6, 6, 1, 1}),
                    fixed_k(spec, 3)};
        }
        case Family::path_vs_cycle_path: {
            need_params(spec, 0);
            const int k = free_k(spec, 2);
            check_order(spec.family, 2 * k);
            return {path_graph(2 * k),
                    disjoint_union(cycle_graph(k + 1), path_graph(k - 1)), k};
        }
        case Family::myrvold_common: {
            need_params(spec, 1);
            const int t = spec.params[0];
            if (t < 2) fail(spec.family, "needs t >= 2");
            check_order(spec.family, 2 * t);
            BuiltPair out{complete_multipartite({t, t}),
                          complete_multipartite({t + 1, t - 1}), fixed_k(spec, 2 * t - 1)};
            out.myrvold_t = t;
            return out;
        }
    }
    throw std::invalid_argument("unknown family");
}

// Range conditions under which the family's claim is stated.
std::optional<std::string> bound_violation(const FamilySpec& spec) {
    const int k = spec.k;
    switch (spec.family) {
        case Family::cycle_split: {
            const int q = spec.params[0], r = spec.params[1];
            if (q < k + 1 || r < k + 1) return "needs q, r >= k+1";
            return std::nullopt;
        }
        case Family::cycle_path: {
            const int q = spec.params[0], r = spec.params[1];
            if (q < k + 1) return "needs q >= k+1";
            if (r < k - 1) return "needs r >= k-1";
            return std::nullopt;
        }
        case Family::path_shift: {
            const int q = spec.params[0], r = spec.params[1];
            if (q < k || r < k) return "needs q, r >= k";
            return std::nullopt;
        }
        case Family::maxdeg2_general: {
            int vl = 0, el = 0, vr = 0, er = 0;
            bool right = false;
            for (int e : spec.params) {
                if (e == 0) {
                    right = true;
                    continue;
                }
                const int v = (e > 0) ? e : -e;
                if (e > 0 && v < k + 1) return "cycles need at least k+1 vertices";
                if (e < 0 && v < k - 1) return "paths need at least k-1 vertices";
                (right ? vr : vl) += v;
                (right ? er : el) += (e > 0) ? v : v - 1;
            }
            if (vl != vr) return "hosts must have equally many vertices";
            if (el != er) return "hosts must have equally many edges";
            if (vl < k) return "hosts need at least k vertices";
            return std::nullopt;
        }
        case Family::cycle_vs_spider: {
            if (spec.params[0] + spec.params[1] + spec.params[2] < 4)
                return "needs a+b+c >= 4";
            return std::nullopt;
        }
        case Family::spider_pair:
        case Family::manvel_stars:
        case Family::erpart_pair:
        case Family::path_vs_cycle_path:
        case Family::myrvold_common:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::cycle_split: return "cycle_split";
        case Family::cycle_path: return "cycle_path";
        case Family::path_shift: return "path_shift";
        case Family::maxdeg2_general: return "maxdeg2_general";
        case Family::spider_pair: return "spider_pair";
        case Family::cycle_vs_spider: return "cycle_vs_spider";
        case Family::manvel_stars: return "manvel_stars";
        case Family::erpart_pair: return "erpart_pair";
        case Family::path_vs_cycle_path: return "path_vs_cycle_path";
        case Family::myrvold_common: return "myrvold_common";
    }
    return "unknown";
}

Family family_from_string(const std::string& name) {
    for (Family f :
         {Family::cycle_split, Family::cycle_path, Family::path_shift,
          Family::maxdeg2_general, Family::spider_pair, Family::cycle_vs_spider,
          Family::manvel_stars, Family::erpart_pair, Family::path_vs_cycle_path,
          Family::myrvold_common})
        if (name == to_string(f)) return f;
    throw std::invalid_argument("unknown family: " + name);
}

SameDeckPair same_deck_pair(const FamilySpec& spec) {
    BuiltPair built = build_pair(spec);
    FamilySpec resolved = spec;
    resolved.k = built.k;
    if (auto why = bound_violation(resolved)) fail(spec.family, *why);
    return {std::move(built.g), std::move(built.h), built.k};
}

bool verify_construction(const FamilySpec& spec, std::string* diagnostic) {
    auto report = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    BuiltPair built;
    try {
        built = build_pair(spec);
    } catch (const std::invalid_argument& e) {
        return report(e.what());
    }
    Deck dg, dh;
    try {
        dg = compute_deck(built.g, built.k);
        dh = compute_deck(built.h, built.k);
    } catch (const DeckError& e) {
        return report(e.what());
    } catch (const std::invalid_argument& e) {
        return report(e.what());
    }
    if (built.myrvold_t > 0) {
        const Deck common = deck_common(dg, dh);
        std::uint64_t total = 0;
        for (const auto& [code, cnt] : common.cards) total += cnt;
        if (total < static_cast<std::uint64_t>(built.myrvold_t) + 1)
            return report("only " + std::to_string(total) + " common cards");
        return true;
    }
    if (!decks_equal(dg, dh))
        return report("decks differ at k = " + std::to_string(built.k));
    if (is_isomorphic(built.g, built.h)) return report("graphs are isomorphic");
    return true;
}

}  // namespace deckforge
