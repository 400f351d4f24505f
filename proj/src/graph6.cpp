#include "deckforge/graph6.hpp"

#include <stdexcept>

namespace deckforge {

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty string");
    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126) throw std::invalid_argument("graph6: orders above 62 are not supported");
    if (first < 63 || first > 125) throw std::invalid_argument("graph6: bad order byte");
    int n = first - 63;
    if (n < 1) throw std::invalid_argument("graph6: order must be at least 1");
    int bits = n * (n - 1) / 2;
    std::size_t expect = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expect) throw std::invalid_argument("graph6: wrong length");
    Graph g(n);
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t) {
            unsigned char group = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + t / 6)]);
            if (group < 63 || group > 126) throw std::invalid_argument("graph6: bad data byte");
            if ((group - 63) >> (5 - t % 6) & 1) g.add_edge(i, j);
        }
    // Trailing padding bits must be zero.
    for (int t2 = bits; t2 % 6 != 0; ++t2) {
        unsigned char group = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + t2 / 6)]);
        if ((group - 63) >> (5 - t2 % 6) & 1) throw std::invalid_argument("graph6: nonzero padding");
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: orders above 62 are not supported");
    int bits = n * (n - 1) / 2;
    std::string out(static_cast<std::size_t>(1 + (bits + 5) / 6), static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.has_edge(i, j))
                out[static_cast<std::size_t>(1 + t / 6)] =
                    static_cast<char>(out[static_cast<std::size_t>(1 + t / 6)] + (1 << (5 - t % 6)));
    return out;
}

}  // namespace deckforge
