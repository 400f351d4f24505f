#include "deckforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "deckforge/canonical.hpp"
#include "json.hpp"

namespace deckforge {

namespace {

// Raw child codes held before an in-place dedup pass (keeps the n = 10
// extension step inside a few hundred MB).
constexpr std::size_t kCompactionLimit = std::size_t{1} << 25;

void sort_unique(std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Append the canonical codes of every one-vertex extension of the parent.
void extend_parent(int m, std::uint64_t parent_bits, std::vector<std::uint64_t>& out) {
    Graph base(m);
    {
        Graph small = graph_from_bits(m - 1, parent_bits);
        for (const auto& [i, j] : small.edges()) base.add_edge(i, j);
    }
    const std::uint32_t masks = std::uint32_t{1} << (m - 1);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        Graph g = base;
        for (int v = 0; v < m - 1; ++v)
            if (mask >> v & 1) g.add_edge(v, m - 1);
        out.push_back(canonical_bits(g));
    }
}

// Run fn(i) over [0, total) on `jobs` threads; true when any call returns
// true (later indices may be skipped once a hit is found).
template <class Fn>
bool parallel_any(std::size_t total, int jobs, Fn&& fn) {
    if (jobs <= 1 || total < 256) {
        for (std::size_t i = 0; i < total; ++i)
            if (fn(i)) return true;
        return false;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> found{false};
    auto worker = [&] {
        while (!found.load(std::memory_order_relaxed)) {
            std::size_t b = next.fetch_add(256);
            if (b >= total) return;
            std::size_t e = std::min(b + 256, total);
            for (std::size_t i = b; i < e; ++i)
                if (fn(i)) {
                    found.store(true, std::memory_order_relaxed);
                    return;
                }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return found.load();
}

bool parse_fingerprint_hex(const std::string& hex, Fingerprint128& out) {
    if (hex.size() != 32) return false;
    std::uint64_t words[2] = {0, 0};
    for (int i = 0; i < 32; ++i) {
        char c = hex[static_cast<std::size_t>(i)];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else return false;
        words[i / 16] = words[i / 16] << 4 | static_cast<unsigned>(v);
    }
    out.hi = words[0];
    out.lo = words[1];
    return true;
}

}  // namespace

Graph graph_from_bits(int n, std::uint64_t bits) {
    Graph g(n);
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t)
            if (bits >> (63 - t) & 1) g.add_edge(i, j);
    return g;
}

std::vector<std::uint64_t> enumerate_graphs(int n, int jobs) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("enumerate_graphs: supported for 1 <= n <= 10");
    std::vector<std::uint64_t> cur{0};
    for (int m = 2; m <= n; ++m) {
        std::vector<std::uint64_t> next;
        if (jobs <= 1 || cur.size() < 1024) {
            for (std::uint64_t parent : cur) {
                extend_parent(m, parent, next);
                if (next.size() >= kCompactionLimit) sort_unique(next);
            }
        } else {
            std::atomic<std::size_t> at{0};
            std::mutex merge_mutex;
            auto worker = [&] {
                std::vector<std::uint64_t> local;
                auto flush = [&] {
                    sort_unique(local);
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    next.insert(next.end(), local.begin(), local.end());
                    if (next.size() >= kCompactionLimit) sort_unique(next);
                    local.clear();
                };
                while (true) {
                    std::size_t b = at.fetch_add(64);
                    if (b >= cur.size()) break;
                    std::size_t e = std::min(b + 64, cur.size());
                    for (std::size_t i = b; i < e; ++i) extend_parent(m, cur[i], local);
                    if (local.size() >= kCompactionLimit / static_cast<unsigned>(jobs)) flush();
                }
                if (!local.empty()) flush();
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        sort_unique(next);
        cur = std::move(next);
    }
    return cur;
}

SmallDeck small_deck(const Graph& g, int k) {
    const int n = g.order();
    if (n > 11) throw std::invalid_argument("small_deck: host limited to 11 vertices");
    if (k < 1 || k > n) throw std::invalid_argument("small_deck: k out of range");

    std::vector<std::uint64_t> codes;
    codes.reserve(binomial(n, k));
    if (k <= 7) {
        detail::for_each_subset(n, k, [&](const int* verts) {
            codes.push_back(canonical_bits_cached(k, labeled_bits(g, verts, k)));
        });
    } else {
        std::vector<int> keep(static_cast<std::size_t>(k));
        detail::for_each_subset(n, k, [&](const int* verts) {
            keep.assign(verts, verts + k);
            codes.push_back(canonical_bits(induced_subgraph(g, keep)));
        });
    }
    std::sort(codes.begin(), codes.end());

    SmallDeck out;
    for (std::size_t i = 0; i < codes.size();) {
        std::size_t j = i;
        while (j < codes.size() && codes[j] == codes[i]) ++j;
        out.emplace_back(codes[i], static_cast<std::uint32_t>(j - i));
        i = j;
    }
    return out;
}

Fingerprint128 small_deck_fingerprint(int n, int k, const SmallDeck& cards) {
    detail::Fp128Hasher h;
    h.byte(static_cast<unsigned char>(n));
    h.byte(static_cast<unsigned char>(k));
    const int nbytes = (k * (k - 1) / 2 + 7) / 8;
    for (const auto& [bits, cnt] : cards) {
        h.byte(static_cast<unsigned char>(k));
        for (int i = 0; i < nbytes; ++i)
            h.byte(static_cast<unsigned char>(bits >> (56 - 8 * i)));
        h.u64le(cnt);
    }
    return h.finish();
}

SameDeckScan same_deck_classes(int n, int k, const ScanOptions& opts) {
    if (n < 2 || n > 10)
        throw std::invalid_argument("same_deck_classes: supported for 2 <= n <= 10");
    if (k < 1 || k > n) throw std::invalid_argument("same_deck_classes: k out of range");

    const std::vector<std::uint64_t> graphs = enumerate_graphs(n, opts.jobs);
    const std::size_t total = graphs.size();
    std::vector<Fingerprint128> fps(total);
    std::vector<char> have(total, 0);

    const std::size_t chunk = opts.chunk_size ? opts.chunk_size : 4096;
    std::string path;
    if (!opts.checkpoint_dir.empty()) {
        std::filesystem::create_directories(opts.checkpoint_dir);
        path = opts.checkpoint_dir + "/same_deck_n" + std::to_string(n) + "_k" +
               std::to_string(k) + ".jsonl";
        if (opts.resume && std::filesystem::exists(path)) {
            std::ifstream in(path);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
                if (j.is_discarded() || !j.is_object()) continue;
                if (j.value("type", std::string()) != "chunk") continue;
                if (j.value("n", -1) != n || j.value("k", -1) != k) continue;
                if (!j.contains("begin") || !j.contains("end") || !j.contains("fp")) continue;
                if (!j["begin"].is_number_unsigned() || !j["end"].is_number_unsigned()) continue;
                const std::size_t b = j["begin"].get<std::size_t>();
                const std::size_t e = j["end"].get<std::size_t>();
                if (!(b < e && e <= total)) continue;
                const auto& arr = j["fp"];
                if (!arr.is_array() || arr.size() != e - b) continue;
                std::vector<Fingerprint128> parsed(e - b);
                bool ok = true;
                for (std::size_t i = 0; i < arr.size() && ok; ++i)
                    ok = arr[i].is_string() &&
                         parse_fingerprint_hex(arr[i].get<std::string>(), parsed[i]);
                if (!ok) continue;
                for (std::size_t i = b; i < e; ++i) {
                    fps[i] = parsed[i - b];
                    have[i] = 1;
                }
            }
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t b = 0; b < total; b += chunk) {
        const std::size_t e = std::min(b + chunk, total);
        bool done = true;
        for (std::size_t i = b; i < e && done; ++i) done = have[i];
        if (!done) pending.emplace_back(b, e);
    }

    std::ofstream log;
    std::mutex log_mutex;
    if (!path.empty() && !pending.empty()) {
        log.open(path, opts.resume ? std::ios::app : std::ios::trunc);
        if (!log) throw std::runtime_error("same_deck_classes: cannot open checkpoint file " + path);
    }

    auto process = [&](std::size_t pi) {
        const auto [b, e] = pending[pi];
        for (std::size_t i = b; i < e; ++i) {
            fps[i] = small_deck_fingerprint(n, k, small_deck(graph_from_bits(n, graphs[i]), k));
            have[i] = 1;
        }
        if (log.is_open()) {
            nlohmann::json arr = nlohmann::json::array();
            for (std::size_t i = b; i < e; ++i) arr.push_back(fps[i].hex());
            nlohmann::json rec{{"type", "chunk"}, {"n", n},   {"k", k},
                               {"begin", b},      {"end", e}, {"fp", std::move(arr)}};
            std::lock_guard<std::mutex> lock(log_mutex);
            log << rec.dump() << '\n';
            log.flush();
        }
    };

    if (opts.jobs <= 1 || pending.size() <= 1) {
        for (std::size_t i = 0; i < pending.size(); ++i) process(i);
    } else {
        std::atomic<std::size_t> at{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = at.fetch_add(1);
                if (i >= pending.size()) return;
                process(i);
            }
        };
        std::vector<std::thread> pool;
        const int nthreads = std::min<int>(opts.jobs, static_cast<int>(pending.size()));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::unordered_map<Fingerprint128, std::vector<std::uint64_t>> groups;
    for (std::size_t i = 0; i < total; ++i) groups[fps[i]].push_back(graphs[i]);

    SameDeckScan out;
    out.n = n;
    out.k = k;
    out.graph_count = total;
    for (const auto& [fp, members] : groups) {
        if (members.size() < 2) continue;
        // Fingerprints only group; equality is re-established exactly.
        std::map<SmallDeck, std::vector<std::uint64_t>> exact;
        for (std::uint64_t bits : members)
            exact[small_deck(graph_from_bits(n, bits), k)].push_back(bits);
        for (auto& [deck, cls] : exact)
            if (cls.size() >= 2) out.classes.push_back(cls);
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

int max_reconstructibility(const Graph& g, int jobs) {
    const int n = g.order();
    if (n > 10)
        throw std::invalid_argument("max_reconstructibility: host limited to 10 vertices");
    if (n == 1) return 0;

    const std::vector<std::uint64_t> all = enumerate_graphs(n, jobs);
    const std::uint64_t self = canonical_bits(g);
    for (int k = n - 1; k >= 1; --k) {
        const SmallDeck mine = small_deck(g, k);
        const bool collide = parallel_any(all.size(), jobs, [&](std::size_t i) {
            if (all[i] == self) return false;
            return small_deck(graph_from_bits(n, all[i]), k) == mine;
        });
        if (collide) return n - k - 1;
    }
    return n - 1;
}

bool check_distinguishing(const Graph& g, int l) {
    const int n = g.order();
    if (n > 12)
        throw std::invalid_argument("check_distinguishing: host limited to 12 vertices");
    const int keep_order = n - l - 1;
    if (l < 0 || keep_order < 1)
        throw std::invalid_argument("check_distinguishing: deletion count out of range");

    std::vector<CanonicalCode> codes;
    codes.reserve(binomial(n, keep_order));
    bool rigid = true;
    std::vector<int> keep(static_cast<std::size_t>(keep_order));
    detail::for_each_subset(n, keep_order, [&](const int* verts) {
        if (!rigid) return;
        keep.assign(verts, verts + keep_order);
        Graph card = induced_subgraph(g, keep);
        if (automorphism_count(card) != 1) {
            rigid = false;
            return;
        }
        codes.push_back(canonical_form(card));
    });
    if (!rigid) return false;
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

Deck sw_card_multiset(const Graph& g, const std::vector<int>& s, int extra) {
    const int n = g.order();
    const int l = static_cast<int>(s.size()) - 1;
    if (l < 2)
        throw std::invalid_argument("sw_card_multiset: subset needs at least 3 vertices");
    std::uint64_t smask = 0;
    for (int v : s) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("sw_card_multiset: subset vertex out of range");
        if (smask >> v & 1)
            throw std::invalid_argument("sw_card_multiset: duplicate subset vertex");
        smask |= std::uint64_t{1} << v;
    }
    if (n < l + 2)
        throw std::invalid_argument("sw_card_multiset: no vertex outside the subset");

    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int x = extra;
    if (x < 0) {
        x = std::countr_zero(full & ~smask);
    } else if (x >= n || (smask >> x & 1)) {
        throw std::invalid_argument("sw_card_multiset: extra vertex must lie outside the subset");
    }

    std::map<CanonicalCode, std::uint64_t> acc;
    auto add_keeping = [&](std::uint64_t keep_mask) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (keep_mask >> v & 1) keep.push_back(v);
        acc[canonical_form(induced_subgraph(g, keep))] += 1;
    };

    for (int u : s) add_keeping((full & ~smask) | std::uint64_t{1} << u);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const std::uint64_t del =
                (smask & ~(std::uint64_t{1} << s[i]) & ~(std::uint64_t{1} << s[j])) |
                std::uint64_t{1} << x;
            add_keeping(full & ~del);
        }

    Deck out;
    out.n = n;
    out.k = n - l;
    out.cards.reserve(acc.size());
    for (auto& [code, cnt] : acc) out.cards.emplace_back(code, cnt);
    return out;
}

}  // namespace deckforge
