#include "deckforge/deck.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "deckforge/graph6.hpp"
#include "json.hpp"

namespace deckforge {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

// Canonical code of an induced subgraph, routed through the fastest
// applicable path for its order.
CanonicalCode canon_induced(const Graph& g, const int* verts, int k) {
    if (k <= 7) {
        std::uint32_t right = labeled_bits(g, verts, k);
        return code_from_bits(k, canonical_bits_cached(k, right));
    }
    std::vector<int> keep(verts, verts + k);
    Graph sub = induced_subgraph(g, keep);
    return canonical_form(sub);
}

Deck materialize(int n, int k, std::map<CanonicalCode, std::uint64_t>& acc) {
    Deck d;
    d.n = n;
    d.k = k;
    d.cards.reserve(acc.size());
    for (auto& [code, cnt] : acc) d.cards.emplace_back(code, cnt);
    return d;
}

}  // namespace

std::uint64_t Deck::count_of(const CanonicalCode& code) const {
    auto it = std::lower_bound(cards.begin(), cards.end(), code,
                               [](const auto& card, const CanonicalCode& c) { return card.first < c; });
    if (it == cards.end() || !(it->first == code)) return 0;
    return it->second;
}

std::string Fingerprint128::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 0; i < 16; ++i) {
        std::uint64_t word = i < 8 ? hi : lo;
        int shift = 60 - 8 * (i & 7) - 4;
        out[static_cast<std::size_t>(2 * i)] = digits[(word >> (shift + 4)) & 0xf];
        out[static_cast<std::size_t>(2 * i + 1)] = digits[(word >> shift) & 0xf];
    }
    return out;
}

Fingerprint128 detail::Fp128Hasher::finish() const {
    Fingerprint128 f;
    f.hi = mix64(h1 ^ (h2 * 0x9e3779b97f4a7c15ull));
    f.lo = mix64(h2 + (h1 << 32 | h1 >> 32));
    return f;
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || n > 64) throw std::invalid_argument("binomial: n out of range");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(r);
}

Deck compute_deck(const Graph& g, int k) {
    const int n = g.order();
    if (k < 1 || k > n) throw std::invalid_argument("compute_deck: k out of range");

    if (k <= 7) {
        // Memoized packed-code path: accumulate on left-aligned code bits.
        std::unordered_map<std::uint64_t, std::uint64_t> acc;
        detail::for_each_subset(n, k, [&](const int* verts) {
            std::uint64_t right = labeled_bits(g, verts, k);
            acc[canonical_bits_cached(k, right)] += 1;
        });
        std::vector<std::pair<std::uint64_t, std::uint64_t>> flat(acc.begin(), acc.end());
        std::sort(flat.begin(), flat.end());
        Deck d;
        d.n = n;
        d.k = k;
        d.cards.reserve(flat.size());
        for (auto& [bits, cnt] : flat) d.cards.emplace_back(code_from_bits(k, bits), cnt);
        return d;
    }

    std::map<CanonicalCode, std::uint64_t> acc;
    detail::for_each_subset(n, k, [&](const int* verts) { acc[canon_induced(g, verts, k)] += 1; });
    return materialize(n, k, acc);
}

bool decks_equal(const Deck& a, const Deck& b) { return a == b; }

Deck derive_subdeck(const Deck& d) {
    if (d.k < 2) throw std::invalid_argument("derive_subdeck: needs k >= 2");
    if (d.k > d.n) throw std::invalid_argument("derive_subdeck: k exceeds n");
    const std::uint64_t repeat = static_cast<std::uint64_t>(d.n - d.k + 1);

    std::map<CanonicalCode, std::uint64_t> acc;
    std::vector<int> verts(static_cast<std::size_t>(d.k - 1));
    for (const auto& [code, cnt] : d.cards) {
        Graph card = graph_from_code(code);
        for (int drop = 0; drop < d.k; ++drop) {
            int at = 0;
            for (int v = 0; v < d.k; ++v)
                if (v != drop) verts[static_cast<std::size_t>(at++)] = v;
            acc[canon_induced(card, verts.data(), d.k - 1)] += cnt;
        }
    }
    for (auto& [code, total] : acc) {
        if (total % repeat != 0)
            throw DeckError("derive_subdeck: aggregated count not divisible by n-k+1");
        total /= repeat;
    }
    return materialize(d.n, d.k - 1, acc);
}

Deck deck_complement(const Deck& d) {
    std::map<CanonicalCode, std::uint64_t> acc;
    for (const auto& [code, cnt] : d.cards)
        acc[canonical_form(complement(graph_from_code(code)))] += cnt;
    return materialize(d.n, d.k, acc);
}

std::uint64_t detail::induced_copy_count(const Graph& host, const Graph& pattern) {
    const int k = host.order();
    const int p = pattern.order();
    if (p > k) return 0;
    if (p == k) return is_isomorphic(host, pattern) ? 1 : 0;

    const int pat_edges = pattern.edge_count();
    std::uint64_t copies = 0;
    if (p <= 7) {
        int identity[8];
        for (int i = 0; i < p; ++i) identity[i] = i;
        const std::uint64_t pat_bits =
            canonical_bits_cached(p, labeled_bits(pattern, identity, p));
        for_each_subset(k, p, [&](const int* verts) {
            std::uint32_t right = labeled_bits(host, verts, p);
            if (std::popcount(right) != pat_edges) return;
            if (canonical_bits_cached(p, right) == pat_bits) ++copies;
        });
        return copies;
    }
    const CanonicalCode pat_code = canonical_form(pattern);
    std::vector<int> keep(static_cast<std::size_t>(p));
    for_each_subset(k, p, [&](const int* verts) {
        keep.assign(verts, verts + p);
        Graph sub = induced_subgraph(host, keep);
        if (sub.edge_count() != pat_edges) return;
        if (canonical_form(sub) == pat_code) ++copies;
    });
    return copies;
}

std::uint64_t count_induced(const Deck& d, const Graph& f) {
    const int p = f.order();
    if (p > d.k) throw std::invalid_argument("count_induced: pattern larger than cards");

    unsigned __int128 total = 0;
    for (const auto& [code, cnt] : d.cards) {
        Graph card = graph_from_code(code);
        std::uint64_t copies = detail::induced_copy_count(card, f);
        total += static_cast<unsigned __int128>(copies) * cnt;
    }
    const std::uint64_t divisor = binomial(d.n - p, d.k - p);
    if (divisor == 0) throw DeckError("count_induced: empty subset divisor");
    if (total % divisor != 0)
        throw DeckError("count_induced: copy total not divisible by C(n-p, k-p)");
    unsigned __int128 s = total / divisor;
    if (s > ~static_cast<std::uint64_t>(0)) throw DeckError("count_induced: count overflow");
    return static_cast<std::uint64_t>(s);
}

Deck deck_common(const Deck& a, const Deck& b) {
    if (a.k != b.k) throw std::invalid_argument("deck_common: mismatched card order");
    Deck out;
    out.n = a.n;
    out.k = a.k;
    std::size_t i = 0, j = 0;
    while (i < a.cards.size() && j < b.cards.size()) {
        if (a.cards[i].first < b.cards[j].first) {
            ++i;
        } else if (b.cards[j].first < a.cards[i].first) {
            ++j;
        } else {
            out.cards.emplace_back(a.cards[i].first,
                                   std::min(a.cards[i].second, b.cards[j].second));
            ++i;
            ++j;
        }
    }
    return out;
}

DeckValidation validate_deck(const Deck& d) {
    if (d.k < 1 || d.k > d.n || d.n > kMaxVertices)
        return {false, "order out of range: need 1 <= k <= n <= 64"};
    for (std::size_t i = 0; i < d.cards.size(); ++i) {
        const auto& [code, cnt] = d.cards[i];
        if (cnt == 0) return {false, "zero multiplicity card"};
        if (code.order() != d.k) return {false, "card order differs from k"};
        try {
            (void)graph_from_code(code);
        } catch (const std::exception&) {
            return {false, "undecodable card code"};
        }
        if (i > 0 && !(d.cards[i - 1].first < code))
            return {false, "cards not sorted strictly ascending"};
    }
    if (d.total() != binomial(d.n, d.k))
        return {false, "total multiplicity differs from C(n,k)"};
    try {
        Deck cur = d;
        while (cur.k > 1) cur = derive_subdeck(cur);
    } catch (const DeckError& e) {
        return {false, std::string("derivation chain failed: ") + e.what()};
    }
    return {true, ""};
}

Fingerprint128 deck_fingerprint(const Deck& d) {
    detail::Fp128Hasher h;
    h.byte(static_cast<unsigned char>(d.n));
    h.byte(static_cast<unsigned char>(d.k));
    for (const auto& [code, cnt] : d.cards) {
        h.bytes(code.bytes.data(), code.bytes.size());
        h.u64le(cnt);
    }
    return h.finish();
}

std::string deck_to_json(const Deck& d) {
    std::vector<std::pair<std::string, std::uint64_t>> rows;
    rows.reserve(d.cards.size());
    for (const auto& [code, cnt] : d.cards)
        rows.emplace_back(write_graph6(graph_from_code(code)), cnt);
    std::sort(rows.begin(), rows.end());

    nlohmann::json cards = nlohmann::json::array();
    for (auto& [g6, cnt] : rows) cards.push_back({{"g6", g6}, {"count", cnt}});
    nlohmann::json j{{"n", d.n}, {"k", d.k}, {"cards", std::move(cards)}};
    return j.dump();
}

Deck deck_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DeckError(std::string("deck JSON parse failed: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("cards"))
            throw DeckError("deck JSON needs fields n, k, cards");
        if (!j["n"].is_number_integer() || !j["k"].is_number_integer() || !j["cards"].is_array())
            throw DeckError("deck JSON field types: n int, k int, cards array");
        const int n = j["n"].get<int>();
        const int k = j["k"].get<int>();
        if (k < 1 || k > n || n > kMaxVertices)
            throw DeckError("deck JSON orders out of range");

        std::map<CanonicalCode, std::uint64_t> acc;
        for (const auto& row : j["cards"]) {
            if (!row.is_object() || !row.contains("g6") || !row.contains("count") ||
                !row["g6"].is_string() || !row["count"].is_number_unsigned())
                throw DeckError("deck JSON card needs string g6 and unsigned count");
            const std::uint64_t cnt = row["count"].get<std::uint64_t>();
            if (cnt == 0) throw DeckError("deck JSON card with zero count");
            Graph g = parse_graph6(row["g6"].get<std::string>());
            if (g.order() != k) throw DeckError("deck JSON card order differs from k");
            acc[canonical_form(g)] += cnt;
        }
        return materialize(n, k, acc);
    } catch (const std::invalid_argument& e) {
        throw DeckError(std::string("deck JSON invalid: ") + e.what());
    }
}

}  // namespace deckforge
