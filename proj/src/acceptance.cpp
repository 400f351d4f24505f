#include "deckforge/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "deckforge/canonical.hpp"
#include "deckforge/constructions.hpp"
#include "deckforge/deck.hpp"
#include "deckforge/degree.hpp"
#include "deckforge/family.hpp"
#include "deckforge/graph.hpp"
#include "deckforge/search.hpp"

namespace deckforge {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

int max_degree(const Graph& g) {
    int m = 0;
    for (int v = 0; v < g.order(); ++v) m = std::max(m, g.degree(v));
    return m;
}

std::string degree_list_str(const std::vector<int>& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

Graph with_isolated(const Graph& g, int extra) {
    Graph out = g;
    for (int i = 0; i < extra; ++i) out = disjoint_union(out, path_graph(1));
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

// Visits every non-increasing part vector with at most `max_parts` parts and
// total order at most `max_n`.
void for_each_part_vector(int max_parts, int max_n,
                          const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (!parts.empty()) f(parts);
        if (static_cast<int>(parts.size()) == max_parts) return;
        for (int t = std::min(cap, remaining); t >= 1; --t) {
            parts.push_back(t);
            rec(remaining - t, t);
            parts.pop_back();
        }
    };
    rec(max_n, max_n);
}

struct Suite {
    const AcceptanceOptions& opts;
    std::ostream& out;
    std::vector<AcceptanceResult> results;

    // Shared between criteria 4 and 8.
    SameDeckScan scan74;
    bool have74 = false;

    const SameDeckScan& seven_four() {
        if (!have74) {
            ScanOptions so;
            so.jobs = opts.jobs;
            scan74 = same_deck_classes(7, 4, so);
            have74 = true;
        }
        return scan74;
    }

    void criterion(int id, const std::string& title,
                   const std::function<bool(std::string&)>& body) {
        AcceptanceResult r;
        r.id = id;
        r.title = title;
        auto t0 = Clock::now();
        try {
            r.pass = body(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("unexpected exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        out << (r.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  "
            << title << "  (" << std::fixed << std::setprecision(1) << r.seconds << " s)\n";
        if (!r.detail.empty()) out << "      " << r.detail << "\n";
        out.flush();
        results.push_back(std::move(r));
    }
};

}  // namespace

std::vector<AcceptanceResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& out) {
    Suite s{opts, out, {}, {}, false};
    out << "acceptance suite: jobs=" << opts.jobs << " seed=" << opts.seed
        << (opts.stretch ? " stretch=on" : "") << "\n";

    s.criterion(1, "3-deck census of K_{7,4,3} and K_{6,6,1,1}", [&](std::string& detail) {
        const Deck a = compute_deck(complete_multipartite({7, 4, 3}), 3);
        const Deck b = compute_deck(complete_multipartite({6, 6, 1, 1}), 3);
        const std::uint64_t k3 = a.count_of(canonical_form(complete_graph(3)));
        const std::uint64_t p3 = a.count_of(canonical_form(path_graph(3)));
        const std::uint64_t e3 = a.count_of(canonical_form(make_graph(3, {})));
        std::ostringstream d;
        d << "decks " << (decks_equal(a, b) ? "equal" : "DIFFER") << "; census " << k3
          << "xK_3 " << p3 << "xP_3 " << e3 << "x3K_1 over " << a.cards.size()
          << " distinct cards";
        detail = d.str();
        return decks_equal(a, b) && a.cards.size() == 3 && k3 == 84 && p3 == 240 && e3 == 40;
    });

    s.criterion(2, "same_deck_classes(5,3) = {C_4+P_1, S_{2,1,1}} plus complements",
                [&](std::string& detail) {
        ScanOptions so;
        so.jobs = opts.jobs;
        const SameDeckScan scan = same_deck_classes(5, 3, so);
        const Graph g1 = disjoint_union(cycle_graph(4), path_graph(1));
        const Graph g2 = spider_graph(2, 1, 1);
        std::vector<std::vector<std::uint64_t>> expected{
            {canonical_bits(g1), canonical_bits(g2)},
            {canonical_bits(complement(g1)), canonical_bits(complement(g2))}};
        for (auto& cls : expected) std::sort(cls.begin(), cls.end());
        std::sort(expected.begin(), expected.end());
        detail = "found " + std::to_string(scan.classes.size()) + " classes among " +
                 std::to_string(scan.graph_count) + " graphs";
        return scan.classes == expected;
    });

    s.criterion(3, std::string("same_deck_classes(n, n-2) empty for n = 6..") +
                       (opts.stretch ? "9" : "8"),
                [&](std::string& detail) {
        bool ok = true;
        std::ostringstream d;
        const int hi = opts.stretch ? 9 : 8;
        for (int n = 6; n <= hi; ++n) {
            ScanOptions so;
            so.jobs = opts.jobs;
            const SameDeckScan scan = same_deck_classes(n, n - 2, so);
            ok = ok && scan.classes.empty();
            if (n > 6) d << ", ";
            d << "n=" << n << ": " << scan.classes.size() << " classes / " << scan.graph_count
              << " graphs";
        }
        detail = d.str();
        return ok;
    });

    s.criterion(4, "same_deck_classes(7,4): exactly 3 classes of size 2, none mixed",
                [&](std::string& detail) {
        const SameDeckScan& scan = s.seven_four();
        bool all_pairs = true, none_mixed = true;
        for (const auto& cls : scan.classes) {
            all_pairs = all_pairs && cls.size() == 2;
            bool first = is_connected(graph_from_bits(7, cls.front()));
            for (std::uint64_t bits : cls)
                if (is_connected(graph_from_bits(7, bits)) != first) none_mixed = false;
        }
        std::ostringstream d;
        d << "computed " << scan.classes.size() << " classes (size 2: "
          << (all_pairs ? "all" : "NOT all") << "; connected/disconnected mixing: "
          << (none_mixed ? "none" : "PRESENT")
          << "); the criterion expects exactly 3, but exhaustive recount over all 1044 "
             "seven-vertex graphs gives 10 -- see README";
        detail = d.str();
        return scan.classes.size() == 3 && all_pairs && none_mixed;
    });

    s.criterion(5, "two-component identities sweep; 3-deck triple with distinct degree lists",
                [&](std::string& detail) {
        bool sweep_ok = true;
        int verified = 0;
        std::string first_fail;
        auto check = [&](Family fam, std::vector<int> params, int k) {
            FamilySpec spec{fam, std::move(params), k};
            std::string why;
            if (verify_construction(spec, &why)) {
                ++verified;
            } else {
                sweep_ok = false;
                if (first_fail.empty())
                    first_fail =
                        std::string(to_string(fam)) + " k=" + std::to_string(k) + ": " + why;
            }
        };
        for (int k = 3; k <= 6; ++k) {
            for (int q = k + 1; 2 * q <= 14; ++q)
                for (int r = q; q + r <= 14; ++r) check(Family::cycle_split, {q, r}, k);
            for (int q = k + 1; q <= 13; ++q)
                for (int r = k - 1; q + r <= 14; ++r) check(Family::cycle_path, {q, r}, k);
            for (int q = k; q <= 14; ++q)
                for (int r = q + 1; q + r - 1 <= 14; ++r) check(Family::path_shift, {q, r}, k);
        }
        const Graph a = disjoint_union(cycle_graph(5), path_graph(1));
        const Graph b = spider_graph(2, 2, 1);
        const Graph c = spider_graph(3, 1, 1);
        const bool triple_equal = decks_equal(compute_deck(a, 3), compute_deck(b, 3)) &&
                                  decks_equal(compute_deck(b, 3), compute_deck(c, 3));
        const auto da = sorted_degrees(a), db = sorted_degrees(b), dc = sorted_degrees(c);
        const bool pairwise = da != db && da != dc && db != dc;
        std::ostringstream d;
        d << verified << " identities verified"
          << (sweep_ok ? std::string() : " (FAIL: " + first_fail + ")")
          << "; triple 3-decks " << (triple_equal ? "equal" : "DIFFER") << "; degree lists "
          << degree_list_str(da) << " / " << degree_list_str(db) << " / " << degree_list_str(dc);
        if (!pairwise)
            d << " -- S_{2,2,1} and S_{3,1,1} coincide, so pairwise-distinct cannot hold";
        detail = d.str();
        return sweep_ok && triple_equal && pairwise;
    });

    s.criterion(6, "spider pairs verify for k = 3..7", [&](std::string& detail) {
        bool ok = true;
        std::string why;
        for (int k = 3; k <= 7; ++k)
            if (!verify_construction(FamilySpec{Family::spider_pair, {}, k}, &why)) {
                ok = false;
                detail = "k=" + std::to_string(k) + ": " + why;
            }
        if (ok) detail = "S_{k-1,k-1,1} vs S_{k,k-2,1} share the k-deck for every k in 3..7";
        return ok;
    });

    s.criterion(7, "star forests with max degree k vs k-1 share the k-deck, k = 3, 4",
                [&](std::string& detail) {
        bool ok = true;
        std::ostringstream d;
        for (int k = 3; k <= 4; ++k) {
            const SameDeckPair pair = same_deck_pair(FamilySpec{Family::manvel_stars, {}, k});
            std::string why;
            const bool v = verify_construction(FamilySpec{Family::manvel_stars, {}, k}, &why);
            const int dg = max_degree(pair.g), dh = max_degree(pair.h);
            ok = ok && v && dg == k && dh == k - 1;
            if (k > 3) d << "; ";
            d << "k=" << k << ": order " << pair.g.order() << ", max degree " << dg << " vs "
              << dh << (v ? "" : " -- " + why);
        }
        detail = d.str();
        return ok;
    });

    s.criterion(8, "degree lists from decks: all n <= 8, k >= maxdeg+2; (7,4) classes agree",
                [&](std::string& detail) {
        bool ok = true;
        std::uint64_t checked = 0;
        std::string first_fail;
        for (int n = 2; n <= 8; ++n) {
            for (std::uint64_t bits : enumerate_graphs(n, opts.jobs)) {
                const Graph g = graph_from_bits(n, bits);
                const std::vector<int> truth = sorted_degrees(g);
                for (int k = max_degree(g) + 2; k <= n; ++k) {
                    const std::vector<int> rec = degree_list_from_deck(compute_deck(g, k));
                    ++checked;
                    if (rec != truth) {
                        ok = false;
                        if (first_fail.empty())
                            first_fail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                         ": got " + degree_list_str(rec) + " want " +
                                         degree_list_str(truth);
                    }
                }
            }
        }
        bool classes_agree = true;
        for (const auto& cls : s.seven_four().classes) {
            const std::vector<int> ref = sorted_degrees(graph_from_bits(7, cls.front()));
            for (std::uint64_t bits : cls)
                if (sorted_degrees(graph_from_bits(7, bits)) != ref) classes_agree = false;
        }
        std::ostringstream d;
        d << checked << " (graph, k) recoveries" << (ok ? "" : " (FAIL: " + first_fail + ")")
          << "; 4-deck classes on 7 vertices share degree lists: "
          << (classes_agree ? "yes" : "NO");
        detail = d.str();
        return ok && classes_agree;
    });

    s.criterion(9, "complete multipartite roundtrip from the (r+1)-deck, r <= 4, n <= 12",
                [&](std::string& detail) {
        bool ok = true;
        int done = 0;
        std::string first_fail;
        for_each_part_vector(4, 12, [&](const std::vector<int>& parts) {
            const int r = static_cast<int>(parts.size());
            int n = 0;
            for (int t : parts) n += t;
            if (n < r + 1) return;  // the (r+1)-deck needs r+1 <= n
            bool good = false;
            try {
                good = reconstruct_complete_multipartite(
                           compute_deck(complete_multipartite(parts), r + 1)) == parts;
            } catch (const ReconError&) {
            }
            ++done;
            if (!good) {
                ok = false;
                if (first_fail.empty()) first_fail = degree_list_str(parts);
            }
        });
        // The equal 3-decks of criterion 1 cannot determine the part vector.
        bool refused = false;
        try {
            reconstruct_complete_multipartite(compute_deck(complete_multipartite({7, 4, 3}), 3));
        } catch (const ReconError&) {
            refused = true;
        }
        std::ostringstream d;
        d << done << " part vectors recovered"
          << (ok ? "" : " (FAIL at " + first_fail + ")")
          << "; 3-deck of K_{7,4,3} (= 3-deck of K_{6,6,1,1}) correctly refused: "
          << (refused ? "yes" : "NO");
        detail = d.str();
        return ok && refused;
    });

    s.criterion(10, "disconnected roundtrip: n <= 8, components <= n-2, from the (n-2)-deck",
                [&](std::string& detail) {
        bool ok = true;
        int done = 0;
        std::string first_fail;
        for (int n = 3; n <= 8; ++n) {
            for (std::uint64_t bits : enumerate_graphs(n, opts.jobs)) {
                const Graph g = graph_from_bits(n, bits);
                std::size_t biggest = 0;
                for (const auto& comp : components(g)) biggest = std::max(biggest, comp.size());
                if (static_cast<int>(biggest) > n - 2) continue;
                bool good = false;
                try {
                    good = is_isomorphic(
                        assemble_components(reconstruct_components(compute_deck(g, n - 2))), g);
                } catch (const ReconError&) {
                }
                ++done;
                if (!good) {
                    ok = false;
                    if (first_fail.empty())
                        first_fail = "n=" + std::to_string(n) + " bits=" + std::to_string(bits);
                }
            }
        }
        detail = std::to_string(done) + " hosts rebuilt" +
                 (ok ? "" : " (FAIL at " + first_fail + ")");
        return ok;
    });

    s.criterion(11, "3-regular hosts: 10-vertex bridge graph from D_6; 2K_4 from D_4",
                [&](std::string& detail) {
        const Graph block =
            make_graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
        Graph bridge = disjoint_union(block, block);
        bridge.add_edge(4, 9);
        const Graph two_k4 = disjoint_union(complete_graph(4), complete_graph(4));
        bool ok1 = false, ok2 = false;
        std::string why;
        try {
            ok1 = is_isomorphic(reconstruct_regular_cutvertex(compute_deck(bridge, 6), 3), bridge);
            ok2 = is_isomorphic(reconstruct_regular_cutvertex(compute_deck(two_k4, 4), 3), two_k4);
        } catch (const ReconError& e) {
            why = std::string("; error: ") + e.what();
        }
        detail = std::string("bridge graph: ") + (ok1 ? "rebuilt" : "FAILED") +
                 "; 2K_4 via the disconnected branch: " + (ok2 ? "rebuilt" : "FAILED") + why;
        return ok1 && ok2;
    });

    s.criterion(12, "deck algebra on 120 seeded random graphs with n <= 8",
                [&](std::string& detail) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<int> order_dist(3, 8);
        std::uniform_real_distribution<double> prob_dist(0.15, 0.85);
        bool derive_ok = true, compl_ok = true, kelly_ok = true, union_ok = true;
        for (int trial = 0; trial < 120; ++trial) {
            const int n = order_dist(rng);
            const double p = prob_dist(rng);
            Graph g = make_graph(n, {});
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (std::generate_canonical<double, 32>(rng) < p) g.add_edge(u, v);

            const int k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            derive_ok = derive_ok &&
                        decks_equal(derive_subdeck(compute_deck(g, k)), compute_deck(g, k - 1));
            compl_ok = compl_ok && decks_equal(deck_complement(compute_deck(g, k)),
                                               compute_deck(complement(g), k));

            const int fp = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
            Graph f = make_graph(fp, {});
            for (int u = 0; u < fp; ++u)
                for (int v = u + 1; v < fp; ++v)
                    if (rng() & 1u) f.add_edge(u, v);
            kelly_ok = kelly_ok && count_induced(compute_deck(g, k), f) ==
                                       detail::induced_copy_count(g, f);

            const int l = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                   std::min(3, n - 2)));
            const Deck lhs = compute_deck(with_isolated(g, l - 1), n - 1);
            std::map<CanonicalCode, std::uint64_t> rhs;
            for (int i = 1; i <= l; ++i) {
                const std::uint64_t mult = binomial(l - 1, i - 1);
                for (const auto& [code, cnt] : compute_deck(g, n - i).cards)
                    rhs[canonical_form(with_isolated(graph_from_code(code), i - 1))] +=
                        mult * cnt;
            }
            bool same = rhs.size() == lhs.cards.size();
            for (const auto& [code, cnt] : lhs.cards) {
                auto it = rhs.find(code);
                same = same && it != rhs.end() && it->second == cnt;
            }
            union_ok = union_ok && same;
        }
        std::ostringstream d;
        d << "derivation: " << (derive_ok ? "ok" : "FAIL") << "; complement duality: "
          << (compl_ok ? "ok" : "FAIL") << "; induced-count agreement: "
          << (kelly_ok ? "ok" : "FAIL") << "; isolated-vertex union identity: "
          << (union_ok ? "ok" : "FAIL");
        detail = d.str();
        return derive_ok && compl_ok && kelly_ok && union_ok;
    });

    s.criterion(13, "common cards of K_{t,t} and K_{t+1,t-1} total t+1, t = 2..5",
                [&](std::string& detail) {
        bool ok = true;
        std::ostringstream d;
        for (int t = 2; t <= 5; ++t) {
            const int k = 2 * t - 1;
            const Deck common = deck_common(compute_deck(complete_multipartite({t, t}), k),
                                            compute_deck(complete_multipartite({t + 1, t - 1}), k));
            ok = ok && common.total() == static_cast<std::uint64_t>(t) + 1;
            if (t > 2) d << ", ";
            d << "t=" << t << ": " << common.total();
        }
        detail = d.str();
        return ok;
    });

    s.criterion(14, std::string("max_reconstructibility(C_n) = ceil(n/2) for n = 5..") +
                        (opts.stretch ? "9" : "8"),
                [&](std::string& detail) {
        bool ok = true;
        std::ostringstream d;
        const int hi = opts.stretch ? 9 : 8;
        for (int n = 5; n <= hi; ++n) {
            const int got = max_reconstructibility(cycle_graph(n), opts.jobs);
            const int want = (n + 1) / 2;
            ok = ok && got == want;
            if (n > 5) d << ", ";
            d << "n=" << n << ": " << got << (got == want ? "" : " (criterion expects " +
                                                                    std::to_string(want) + ")");
        }
        if (!ok)
            d << " -- C_5 shares its 2-deck with every other 5-vertex 5-edge graph, so the "
                 "true value at n=5 is 2; see README";
        detail = d.str();
        return ok;
    });

    int failed = 0;
    for (const auto& r : s.results) failed += r.pass ? 0 : 1;
    out << (failed == 0 ? "all 14 criteria hold"
                        : std::to_string(14 - failed) + " of 14 criteria hold, " +
                              std::to_string(failed) + " fail")
        << "\n";
    return s.results;
}

}  // namespace deckforge
