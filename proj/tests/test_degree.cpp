#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

#include "deckforge/degree.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace deckforge;

namespace {

// Literal-definition oracle: walk every k-subset of the host and tally the
// in-card degree of every card vertex.
std::vector<mpz_class> brute_profile_sums(const Graph& g, int k) {
    const int n = g.order();
    std::vector<mpz_class> sums(static_cast<std::size_t>(k), 0);
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            int deg = std::popcount(g.neighbors(v) & mask);
            sums[static_cast<std::size_t>(deg)] += 1;
        }
    }
    return sums;
}

std::vector<int> sorted_degrees(const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

std::map<int, std::uint64_t> zero_high(int n, int k) {
    std::map<int, std::uint64_t> m;
    for (int i = k - 1; i < n; ++i) m[i] = 0;
    return m;
}

}  // namespace

TEST_CASE("profile sums match the subset-enumeration oracle") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);  // 4..8
        Graph g = testutil::random_graph(rng, n, 0.45);
        int k = 1 + static_cast<int>(rng() % n);
        CAPTURE(trial);
        CHECK(degree_profile_sums(compute_deck(g, k)) == brute_profile_sums(g, k));
    }
}

TEST_CASE("profile sums satisfy the histogram identity") {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = testutil::random_graph(rng, n, 0.5);
        int k = 2 + static_cast<int>(rng() % (n - 1));
        auto sums = degree_profile_sums(compute_deck(g, k));

        std::vector<std::uint64_t> hist(static_cast<std::size_t>(n), 0);
        for (int deg : g.degrees()) hist[static_cast<std::size_t>(deg)]++;
        for (int j = 0; j < k; ++j) {
            mpz_class expect = 0;
            for (int i = 0; i < n; ++i) {
                mpz_class c1, c2;
                mpz_bin_uiui(c1.get_mpz_t(), static_cast<unsigned long>(i),
                             static_cast<unsigned long>(j));
                if (n - 1 - i >= k - 1 - j && k - 1 - j >= 0)
                    mpz_bin_uiui(c2.get_mpz_t(), static_cast<unsigned long>(n - 1 - i),
                                 static_cast<unsigned long>(k - 1 - j));
                expect += mpz_class(hist[static_cast<std::size_t>(i)]) * c1 * c2;
            }
            CHECK(sums[static_cast<std::size_t>(j)] == expect);
        }
    }
}

TEST_CASE("degree list recovered whenever cards exceed the max degree by two") {
    std::mt19937_64 rng(777);
    int tested = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);  // 5..8
        Graph g = testutil::random_graph(rng, n, 0.3);
        auto degs = g.degrees();
        int delta = *std::max_element(degs.begin(), degs.end());
        for (int k = delta + 2; k <= n; ++k) {
            Deck d = compute_deck(g, k);
            CHECK(max_card_degree(d) == delta);
            CHECK(degree_list_from_deck(d) == sorted_degrees(g));
            ++tested;
        }
    }
    CHECK(tested > 30);  // the sweep actually exercised the solver
}

TEST_CASE("degree list refuses cards that may clip the max degree") {
    // Star K_{1,3}: three-vertex cards have max degree 2 = k - 1, so the host
    // max degree is not pinned down.
    Deck d = compute_deck(star_graph(3), 3);
    CHECK(max_card_degree(d) == 2);
    CHECK_THROWS_AS(degree_list_from_deck(d), ReconError);
}

TEST_CASE("explicit high-degree knowledge completes the star reconstruction") {
    // D_3(K_{1,3}) = {P_3: 3, 3K_1: 1}; telling the solver a_2 = 0, a_3 = 1
    // recovers the histogram (0,3,0,1).
    Deck d = compute_deck(star_graph(3), 3);
    auto sums = degree_profile_sums(d);
    REQUIRE(sums == std::vector<mpz_class>{3, 6, 3});
    auto hist = solve_degree_list(4, 3, sums, {{2, 0}, {3, 1}});
    CHECK(hist == std::vector<std::uint64_t>{0, 3, 0, 1});
}

TEST_CASE("solver recovers histograms of dense hosts given true high entries") {
    std::mt19937_64 rng(4004);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);  // 6..8
        Graph g = testutil::random_graph(rng, n, 0.6);
        int k = 3 + static_cast<int>(rng() % 3);  // 3..5
        std::vector<std::uint64_t> hist(static_cast<std::size_t>(n), 0);
        for (int deg : g.degrees()) hist[static_cast<std::size_t>(deg)]++;
        std::map<int, std::uint64_t> high;
        for (int i = k - 1; i < n; ++i) high[i] = hist[static_cast<std::size_t>(i)];
        auto sums = degree_profile_sums(compute_deck(g, k));
        CHECK(solve_degree_list(n, k, sums, high) == hist);
    }
}

TEST_CASE("solver flags inconsistent input") {
    Deck d = compute_deck(star_graph(3), 3);
    auto sums = degree_profile_sums(d);

    // Wrong high entries fail the top cross-check.
    CHECK_THROWS_AS(solve_degree_list(4, 3, sums, {{2, 1}, {3, 0}}), ReconError);

    // Inexact division: S_1 = 5 cannot split over C(2,1) = 2 slots.
    CHECK_THROWS_AS(solve_degree_list(4, 3, {mpz_class(3), mpz_class(5), mpz_class(3)},
                                      {{2, 0}, {3, 1}}),
                    ReconError);

    // Negative intermediate count.
    CHECK_THROWS_AS(solve_degree_list(4, 3, {mpz_class(3), mpz_class(0), mpz_class(3)},
                                      {{2, 0}, {3, 1}}),
                    ReconError);

    // known_high must cover [k-1, n-1] exactly.
    CHECK_THROWS_AS(solve_degree_list(4, 3, sums, {{3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(solve_degree_list(4, 3, sums, {{1, 0}, {2, 0}, {3, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_degree_list(4, 3, {mpz_class(3)}, {{2, 0}, {3, 1}}),
                    std::invalid_argument);
}

TEST_CASE("complete-graph deck at full order cross-checks cleanly") {
    Deck d = compute_deck(complete_graph(6), 6);
    auto hist = solve_degree_list(6, 6, degree_profile_sums(d), {{5, 6}});
    CHECK(hist == std::vector<std::uint64_t>{0, 0, 0, 0, 0, 6});
}

TEST_CASE("degree threshold matches frozen closed-form values") {
    CHECK(static_cast<double>(taylor_threshold(3)) ==
          doctest::Approx(25.13495331106458).epsilon(1e-12));
    CHECK(static_cast<double>(taylor_threshold(4)) ==
          doctest::Approx(19.38763017371851).epsilon(1e-12));
    CHECK(static_cast<double>(taylor_threshold(5)) ==
          doctest::Approx(19.46940554789261).epsilon(1e-12));
    CHECK(static_cast<double>(taylor_threshold(10)) ==
          doctest::Approx(29.041763490036168).epsilon(1e-12));
    CHECK(static_cast<double>(taylor_threshold(100)) ==
          doctest::Approx(266.46877887181824).epsilon(1e-12));
    CHECK(static_cast<double>(taylor_threshold(1000)) ==
          doctest::Approx(2706.463914159796).epsilon(1e-12));
}

TEST_CASE("degree threshold domain and shape") {
    CHECK_THROWS_AS(taylor_threshold(0), std::invalid_argument);
    CHECK_THROWS_AS(taylor_threshold(-3), std::invalid_argument);
    CHECK_THROWS_AS(taylor_threshold(1), std::domain_error);
    CHECK_THROWS_AS(taylor_threshold(2), std::domain_error);

    // Decreases from 3 to 4, then increases.
    CHECK(taylor_threshold(3) > taylor_threshold(4));
    for (int l = 4; l < 60; ++l) CHECK(taylor_threshold(l) < taylor_threshold(l + 1));

    // Asymptotic slope e: g(l)/l approaches e from below at large l.
    long double ratio = taylor_threshold(1000000) / 1000000.0L;
    CHECK(static_cast<double>(ratio) == doctest::Approx(2.7182509796745333).epsilon(1e-9));
    CHECK(std::abs(static_cast<double>(ratio) - std::exp(1.0)) < 1e-4);
}
