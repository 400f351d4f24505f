#include "deckforge/degree.hpp"

#include <algorithm>
#include <cmath>

namespace deckforge {

namespace {

mpz_class mpz_binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

}  // namespace

std::vector<mpz_class> degree_profile_sums(const Deck& d) {
    std::vector<mpz_class> sums(static_cast<std::size_t>(d.k), 0);
    for (const auto& [code, cnt] : d.cards) {
        Graph card = graph_from_code(code);
        for (int deg : card.degrees())
            sums[static_cast<std::size_t>(deg)] += mpz_class(cnt);
    }
    return sums;
}

int max_card_degree(const Deck& d) {
    int best = 0;
    for (const auto& [code, cnt] : d.cards) {
        Graph card = graph_from_code(code);
        for (int deg : card.degrees()) best = std::max(best, deg);
    }
    return best;
}

std::vector<std::uint64_t> solve_degree_list(
    int n, int k, const std::vector<mpz_class>& sums,
    const std::map<int, std::uint64_t>& known_high) {
    if (n < 1 || n > kMaxVertices || k < 1 || k > n)
        throw std::invalid_argument("solve_degree_list: need 1 <= k <= n <= 64");
    if (sums.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("solve_degree_list: need one sum per degree 0..k-1");
    for (const auto& [i, v] : known_high)
        if (i < k - 1 || i >= n)
            throw std::invalid_argument("solve_degree_list: known_high keys must lie in [k-1, n-1]");
    for (int i = k - 1; i < n; ++i)
        if (!known_high.count(i))
            throw std::invalid_argument("solve_degree_list: known_high must cover every degree >= k-1");

    std::vector<mpz_class> a(static_cast<std::size_t>(n), 0);
    for (const auto& [i, v] : known_high) a[static_cast<std::size_t>(i)] = mpz_class(v);

    for (int j = k - 1; j >= 0; --j) {
        mpz_class rest = 0;
        const int lo = (j == k - 1) ? j : j + 1;
        for (int i = lo; i < n && i <= n - k + j; ++i)
            rest += a[static_cast<std::size_t>(i)] * mpz_binom(i, j) *
                    mpz_binom(n - 1 - i, k - 1 - j);
        if (j == k - 1) {
            if (rest != sums[static_cast<std::size_t>(j)])
                throw ReconError("solve_degree_list: top profile sum contradicts known high degrees");
            continue;
        }
        mpz_class num = sums[static_cast<std::size_t>(j)] - rest;
        if (num < 0)
            throw ReconError("solve_degree_list: negative count for degree " + std::to_string(j));
        mpz_class coef = mpz_binom(n - 1 - j, k - 1 - j);
        if (num % coef != 0)
            throw ReconError("solve_degree_list: inexact division at degree " + std::to_string(j));
        a[static_cast<std::size_t>(j)] = num / coef;
    }

    mpz_class vertex_total = 0, degree_total = 0;
    for (int i = 0; i < n; ++i) {
        vertex_total += a[static_cast<std::size_t>(i)];
        degree_total += mpz_class(i) * a[static_cast<std::size_t>(i)];
    }
    if (vertex_total != n)
        throw ReconError("solve_degree_list: histogram total differs from n");
    if (degree_total % 2 != 0)
        throw ReconError("solve_degree_list: odd degree sum");

    std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)].get_ui();
    return out;
}

std::vector<int> degree_list_from_deck(const Deck& d) {
    const int observed = max_card_degree(d);
    if (d.k < observed + 2)
        throw ReconError("degree_list_from_deck: need card order >= max card degree + 2");
    std::map<int, std::uint64_t> zeros;
    for (int i = d.k - 1; i < d.n; ++i) zeros[i] = 0;
    auto histogram = solve_degree_list(d.n, d.k, degree_profile_sums(d), zeros);
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(d.n));
    for (int i = d.n - 1; i >= 0; --i)
        for (std::uint64_t c = 0; c < histogram[static_cast<std::size_t>(i)]; ++c)
            seq.push_back(i);
    return seq;
}

long double taylor_threshold(int l) {
    if (l < 1) throw std::invalid_argument("taylor_threshold: needs a positive deletion count");
    const long double ll = logl(static_cast<long double>(l));
    const long double denom = static_cast<long double>(l - 1) * ll - 1.0L;
    if (denom <= 0.0L)
        throw std::domain_error("taylor_threshold: undefined below l = 3");
    const long double e = expl(1.0L);
    return (static_cast<long double>(l) - ll + 1.0L) *
               (e + (e * ll + e + 1.0L) / denom) +
           1.0L;
}

}  // namespace deckforge
