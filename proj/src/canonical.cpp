#include "deckforge/canonical.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <memory>
#include <mutex>

namespace deckforge {

namespace {

constexpr int kMaxBits = kMaxVertices * (kMaxVertices - 1) / 2;
constexpr int kMaxWords = (kMaxBits + 63) / 64;

// Branch-and-bound search for the lexicographically minimal row-major
// upper-triangle bit string.  Vertices are placed position by position; the
// not-yet-placed vertices are kept as an ordered list of cells (bit masks).
// Placing vertex u at the next position emits u's full row: within each cell,
// non-neighbors of u precede neighbors, which is forced for minimality and is
// realized by splitting every cell by N(u).  Cells stay homogeneous with
// respect to every placed vertex, so any member of the first cell is
// consistent with the bits already emitted.  Only candidates whose emitted
// row is minimal can start a minimal completion; among those, candidates that
// differ by a transposition automorphism (twins) yield identical subtrees and
// are tried once.  Completions that tie with the incumbent witness an
// automorphism (two equal-code labelings).  Two consequences are exploited:
// candidates lying in the orbit of an already-tried candidate under the group
// generated by recorded prefix-fixing automorphisms are skipped, and after a
// tie the search resumes at the first level where the current path left the
// incumbent's path, because the subtree between is the automorphic image of
// one that is already fully explored.  Both keep hosts with many
// interchangeable components tractable.
struct CanonEngine {
    static constexpr std::size_t kMaxAutos = 256;

    int n = 0;
    int total_bits = 0;
    std::array<std::uint64_t, kMaxVertices> nbr{};
    std::array<std::array<std::uint64_t, kMaxVertices>, kMaxVertices + 1> cells{};
    std::array<int, kMaxVertices + 1> num_cells{};
    std::array<std::uint8_t, kMaxVertices + 1> min_sig{};
    std::array<std::uint64_t, kMaxWords> cur{}, best{};
    std::array<std::uint8_t, kMaxVertices> cur_perm{}, best_perm{};
    std::vector<std::array<std::uint8_t, kMaxVertices>> autos;
    bool have_best = false;

    void load(const Graph& g) {
        n = g.order();
        total_bits = n * (n - 1) / 2;
        for (int v = 0; v < n; ++v) nbr[static_cast<std::size_t>(v)] = g.neighbors(v);
    }

    // cur and best describe the same code, so position i's vertices correspond
    // under an automorphism mapping best_perm[i] to cur_perm[i].
    void record_automorphism() {
        if (autos.size() >= kMaxAutos) return;
        std::array<std::uint8_t, kMaxVertices> a{};
        bool identity = true;
        for (int i = 0; i < n; ++i) {
            a[best_perm[static_cast<std::size_t>(i)]] = cur_perm[static_cast<std::size_t>(i)];
            identity = identity && best_perm[static_cast<std::size_t>(i)] ==
                                       cur_perm[static_cast<std::size_t>(i)];
        }
        if (identity) return;
        for (const auto& known : autos)
            if (std::equal(known.begin(), known.begin() + n, a.begin())) return;
        autos.push_back(a);
    }

    void set_bit(int pos, bool one) {
        int w = pos >> 6, b = 63 - (pos & 63);
        if (one)
            cur[static_cast<std::size_t>(w)] |= std::uint64_t{1} << b;
        else
            cur[static_cast<std::size_t>(w)] &= ~(std::uint64_t{1} << b);
    }

    // Compare cur to best over the first `bits` positions.
    int cmp_prefix(int bits) const {
        int full = bits >> 6;
        for (int w = 0; w < full; ++w)
            if (cur[static_cast<std::size_t>(w)] != best[static_cast<std::size_t>(w)])
                return cur[static_cast<std::size_t>(w)] < best[static_cast<std::size_t>(w)] ? -1 : 1;
        int rem = bits & 63;
        if (rem) {
            std::uint64_t mask = ~std::uint64_t{0} << (64 - rem);
            std::uint64_t a = cur[static_cast<std::size_t>(full)] & mask;
            std::uint64_t b = best[static_cast<std::size_t>(full)] & mask;
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }

    // Returns the level at which the caller chain should resume trying
    // candidates; n means no jump.  A value below the caller's own level makes
    // it abandon its remaining candidates and propagate the value up.
    int dfs(int level, int left, int emitted) {
        if (num_cells[static_cast<std::size_t>(level)] == 0) {
            if (!have_best) {
                best = cur;
                best_perm = cur_perm;
                have_best = true;
                return n;
            }
            int c = cmp_prefix(total_bits);
            if (c < 0) {
                best = cur;
                best_perm = cur_perm;
            } else if (c == 0) {
                record_automorphism();
                // The path diverged from the incumbent's path at h; the two
                // subtrees hanging there correspond under the automorphism
                // just witnessed, and the incumbent's side is already done.
                int h = 0;
                while (h < n && cur_perm[static_cast<std::size_t>(h)] ==
                                    best_perm[static_cast<std::size_t>(h)])
                    ++h;
                return h;
            }
            return n;
        }
        const auto& cs = cells[static_cast<std::size_t>(level)];
        int nc = num_cells[static_cast<std::size_t>(level)];
        std::uint64_t first = cs[0];

        // Pass 1: minimal row signature (neighbor count per cell, first cell
        // counted without the candidate itself).
        int min_u = std::countr_zero(first);
        min_sig[0] = static_cast<std::uint8_t>(std::popcount(nbr[static_cast<std::size_t>(min_u)] & first));
        for (int j = 1; j < nc; ++j)
            min_sig[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
                std::popcount(nbr[static_cast<std::size_t>(min_u)] & cs[static_cast<std::size_t>(j)]));
        for (std::uint64_t m = first & (first - 1); m; m &= m - 1) {
            int u = std::countr_zero(m);
            bool smaller = false;
            for (int j = 0; j < nc; ++j) {
                auto d = static_cast<std::uint8_t>(
                    std::popcount(nbr[static_cast<std::size_t>(u)] & cs[static_cast<std::size_t>(j)]));
                if (!smaller) {
                    if (d > min_sig[static_cast<std::size_t>(j)]) break;
                    if (d < min_sig[static_cast<std::size_t>(j)]) smaller = true;
                }
                if (smaller) min_sig[static_cast<std::size_t>(j)] = d;
            }
            if (smaller) min_u = u;
        }

        // Pass 2: all candidates matching the minimal signature.
        std::array<std::uint8_t, kMaxVertices> cand{};
        int num_cand = 0;
        for (std::uint64_t m = first; m; m &= m - 1) {
            int u = std::countr_zero(m);
            bool match = true;
            for (int j = 0; j < nc && match; ++j)
                match = std::popcount(nbr[static_cast<std::size_t>(u)] & cs[static_cast<std::size_t>(j)]) ==
                        min_sig[static_cast<std::size_t>(j)];
            if (match) cand[static_cast<std::size_t>(num_cand++)] = static_cast<std::uint8_t>(u);
        }

        // Emit the row realized by any minimal candidate.
        int pos = emitted;
        for (int j = 0; j < nc; ++j) {
            int size = std::popcount(cs[static_cast<std::size_t>(j)]) - (j == 0 ? 1 : 0);
            int ones = min_sig[static_cast<std::size_t>(j)];
            for (int t = 0; t < size - ones; ++t) set_bit(pos++, false);
            for (int t = 0; t < ones; ++t) set_bit(pos++, true);
        }
        if (have_best && cmp_prefix(pos) > 0) return n;

        // Branch on candidates, skipping twins of ones already tried and
        // candidates inside the orbit of a tried one under the group generated
        // by recorded prefix-fixing automorphisms.  `closed` holds that orbit
        // union; it grows as candidates are taken and as deeper recursion
        // records fresh generators.
        std::array<std::uint8_t, kMaxVertices> tried{};
        std::array<std::uint16_t, kMaxAutos> fixing{};
        std::uint64_t closed = 0;
        int num_tried = 0;
        std::size_t num_fixing = 0, autos_classified = 0;
        auto close_over_fixing = [&] {
            for (bool grew = true; grew;) {
                grew = false;
                for (std::size_t f = 0; f < num_fixing; ++f) {
                    const auto& a = autos[fixing[f]];
                    std::uint64_t img = 0;
                    for (std::uint64_t m = closed; m; m &= m - 1)
                        img |= std::uint64_t{1}
                               << a[static_cast<std::size_t>(std::countr_zero(m))];
                    if (img & ~closed) {
                        closed |= img;
                        grew = true;
                    }
                }
            }
        };
        for (int c = 0; c < num_cand; ++c) {
            int u = cand[static_cast<std::size_t>(c)];
            std::uint64_t ubit = std::uint64_t{1} << u;
            bool stale = false;
            while (autos_classified < autos.size()) {
                const auto& a = autos[autos_classified];
                bool fixes = true;
                for (int i = 0; i < level && fixes; ++i) {
                    std::uint8_t p = cur_perm[static_cast<std::size_t>(i)];
                    fixes = a[p] == p;
                }
                if (fixes) {
                    fixing[num_fixing++] = static_cast<std::uint16_t>(autos_classified);
                    stale = true;
                }
                ++autos_classified;
            }
            if (stale) close_over_fixing();
            if (closed >> u & 1) continue;
            bool twin = false;
            for (int t = 0; t < num_tried && !twin; ++t) {
                int v = tried[static_cast<std::size_t>(t)];
                std::uint64_t pair = ubit | (std::uint64_t{1} << v);
                twin = ((nbr[static_cast<std::size_t>(u)] ^ nbr[static_cast<std::size_t>(v)]) & ~pair) == 0;
            }
            if (twin) continue;
            tried[static_cast<std::size_t>(num_tried++)] = static_cast<std::uint8_t>(u);
            closed |= ubit;
            close_over_fixing();
            cur_perm[static_cast<std::size_t>(level)] = static_cast<std::uint8_t>(u);

            auto& next = cells[static_cast<std::size_t>(level + 1)];
            int out = 0;
            std::uint64_t nu = nbr[static_cast<std::size_t>(u)];
            for (int j = 0; j < nc; ++j) {
                std::uint64_t cell = cs[static_cast<std::size_t>(j)] & ~ubit;
                std::uint64_t non = cell & ~nu, yes = cell & nu;
                if (non) next[static_cast<std::size_t>(out++)] = non;
                if (yes) next[static_cast<std::size_t>(out++)] = yes;
            }
            num_cells[static_cast<std::size_t>(level + 1)] = out;
            int jump = dfs(level + 1, left - 1, pos);
            if (jump < level) return jump;
        }
        return n;
    }

    void run(const std::vector<std::uint64_t>& initial_cells) {
        have_best = false;
        autos.clear();
        autos.reserve(kMaxAutos);
        num_cells[0] = static_cast<int>(initial_cells.size());
        for (std::size_t j = 0; j < initial_cells.size(); ++j) cells[0][j] = initial_cells[j];
        dfs(0, n, 0);
    }
};

std::string pack_code_bytes(int n, const std::array<std::uint64_t, kMaxWords>& words) {
    int bits = n * (n - 1) / 2;
    std::string out(static_cast<std::size_t>(1 + (bits + 7) / 8), '\0');
    out[0] = static_cast<char>(static_cast<unsigned char>(n));
    for (int t = 0; t < bits; ++t) {
        int w = t >> 6, b = 63 - (t & 63);
        if (words[static_cast<std::size_t>(w)] >> b & 1u)
            out[static_cast<std::size_t>(1 + t / 8)] |= static_cast<char>(0x80u >> (t % 8));
    }
    return out;
}

void check_cells(const Graph& g, const std::vector<std::uint64_t>& cells) {
    std::uint64_t all = 0;
    for (std::uint64_t c : cells) {
        if (c == 0 || (all & c)) throw std::invalid_argument("cells must be disjoint and nonempty");
        all |= c;
    }
    std::uint64_t full =
        g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    if (all != full) throw std::invalid_argument("cells must cover all vertices");
}

CanonicalCode canonical_via_engine(const Graph& g, const std::vector<std::uint64_t>& cells) {
    CanonEngine engine;
    engine.load(g);
    engine.run(cells);
    return CanonicalCode{pack_code_bytes(engine.n, engine.best)};
}

std::vector<std::uint64_t> single_cell(const Graph& g) {
    return {g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1};
}

}  // namespace

CanonicalCode canonical_form(const Graph& g) {
    int n = g.order();
    if (n <= 11) return code_from_bits(n, canonical_bits(g));
    return canonical_via_engine(g, single_cell(g));
}

CanonicalCode canonical_form_with_cells(const Graph& g,
                                        const std::vector<std::uint64_t>& ordered_cells) {
    check_cells(g, ordered_cells);
    return canonical_via_engine(g, ordered_cells);
}

Graph graph_from_code(const CanonicalCode& code) {
    if (code.bytes.empty()) throw std::invalid_argument("empty code");
    int n = code.order();
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("code order out of range");
    int bits = n * (n - 1) / 2;
    if (code.bytes.size() != static_cast<std::size_t>(1 + (bits + 7) / 8))
        throw std::invalid_argument("code length does not match order");
    Graph g(n);
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t) {
            unsigned char byte = static_cast<unsigned char>(code.bytes[static_cast<std::size_t>(1 + t / 8)]);
            if (byte >> (7 - t % 8) & 1u) g.add_edge(i, j);
        }
    return g;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (a.order() <= 11) return canonical_bits(a) == canonical_bits(b);
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

std::uint64_t automorphism_count(const Graph& g) {
    int n = g.order();
    if (n > 16) throw std::invalid_argument("automorphism_count is guarded at n <= 16");
    if (n == 1) return 1;
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::uint64_t total = 1;
    std::vector<std::uint64_t> prefix;  // singleton cells for the fixed base
    std::uint64_t based = 0;
    for (int level = 0; level < n - 1; ++level) {
        int b = std::countr_zero(~based & full);
        auto forced = [&](int v) {
            std::vector<std::uint64_t> cells = prefix;
            cells.push_back(std::uint64_t{1} << v);
            std::uint64_t rest = full & ~based & ~(std::uint64_t{1} << v);
            if (rest) cells.push_back(rest);
            return canonical_via_engine(g, cells);
        };
        CanonicalCode ref = forced(b);
        std::uint64_t orbit = 1;
        for (std::uint64_t m = full & ~based & ~(std::uint64_t{1} << b); m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (forced(v) == ref) ++orbit;
        }
        total *= orbit;
        prefix.push_back(std::uint64_t{1} << b);
        based |= std::uint64_t{1} << b;
    }
    return total;
}

std::uint64_t canonical_bits(const Graph& g) {
    int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_bits requires n <= 11");
    if (n <= 7) {
        std::array<int, 8> identity{};
        for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;
        return canonical_bits_cached(n, labeled_bits(g, identity.data(), n));
    }
    CanonEngine engine;
    engine.load(g);
    engine.run(single_cell(g));
    return engine.best[0];
}

CanonicalCode code_from_bits(int n, std::uint64_t bits_left_aligned) {
    if (n < 1 || n > 11) throw std::invalid_argument("code_from_bits requires n in [1, 11]");
    std::array<std::uint64_t, kMaxWords> words{};
    words[0] = bits_left_aligned;
    return CanonicalCode{pack_code_bytes(n, words)};
}

std::uint64_t bits_from_code(const CanonicalCode& code) {
    int n = code.order();
    if (n > 11) throw std::invalid_argument("bits_from_code requires n <= 11");
    int bits = n * (n - 1) / 2;
    std::uint64_t out = 0;
    for (int t = 0; t < bits; ++t) {
        unsigned char byte = static_cast<unsigned char>(code.bytes[static_cast<std::size_t>(1 + t / 8)]);
        if (byte >> (7 - t % 8) & 1u) out |= std::uint64_t{1} << (63 - t);
    }
    return out;
}

std::uint32_t labeled_bits(const Graph& g, const int* subset, int k) {
    std::uint32_t out = 0;
    int t = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++t)
            if (g.neighbors(subset[i]) >> subset[j] & 1u) out |= std::uint32_t{1} << t;
    return out;
}

namespace {

struct CanonCache {
    std::once_flag once;
    std::unique_ptr<std::atomic<std::uint64_t>[]> table;
};

std::array<CanonCache, 8> g_cache;

std::atomic<std::uint64_t>* cache_for(int k) {
    CanonCache& c = g_cache[static_cast<std::size_t>(k)];
    std::call_once(c.once, [&] {
        std::size_t size = std::size_t{1} << (k * (k - 1) / 2);
        c.table = std::make_unique<std::atomic<std::uint64_t>[]>(size);
        for (std::size_t i = 0; i < size; ++i) c.table[i].store(0, std::memory_order_relaxed);
    });
    return c.table.get();
}

}  // namespace

std::uint64_t canonical_bits_cached(int k, std::uint32_t labeled_right) {
    if (k < 1 || k > 7) throw std::invalid_argument("canonical_bits_cached requires k in [1, 7]");
    if (k == 1) return 0;
    std::atomic<std::uint64_t>* table = cache_for(k);
    std::uint64_t hit = table[labeled_right].load(std::memory_order_relaxed);
    if (hit) return hit - 1;
    Graph g(k);
    int t = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++t)
            if (labeled_right >> t & 1u) g.add_edge(i, j);
    CanonEngine engine;
    engine.load(g);
    engine.run({(std::uint64_t{1} << k) - 1});
    std::uint64_t bits = engine.best[0];
    table[labeled_right].store(bits + 1, std::memory_order_relaxed);
    return bits;
}

}  // namespace deckforge
