#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "deckforge/graph.hpp"

namespace deckforge {

// Canonical code of a graph: one byte holding the order n, followed by the
// lexicographically minimal row-major upper-triangle adjacency bit string
// over all vertex relabelings, packed MSB-first into bytes.  Two graphs are
// isomorphic exactly when their codes are equal.
struct CanonicalCode {
    std::string bytes;

    int order() const { return static_cast<unsigned char>(bytes.at(0)); }

    bool operator==(const CanonicalCode& o) const { return bytes == o.bytes; }
    bool operator!=(const CanonicalCode& o) const { return bytes != o.bytes; }
    bool operator<(const CanonicalCode& o) const { return bytes < o.bytes; }
};

CanonicalCode canonical_form(const Graph& g);

// Same minimization restricted to relabelings that keep the given ordered
// vertex classes in order (classes partition 0..n-1).  The unrestricted form
// is the special case of a single class.
CanonicalCode canonical_form_with_cells(const Graph& g,
                                        const std::vector<std::uint64_t>& ordered_cells);

// Rebuild the canonically labeled graph from its code.
Graph graph_from_code(const CanonicalCode& code);

bool is_isomorphic(const Graph& a, const Graph& b);

// Exact automorphism group order via an orbit-stabilizer chain of
// prefix-forced canonical forms.  Guarded at n <= 16.
std::uint64_t automorphism_count(const Graph& g);

// Fast path for graphs on at most 11 vertices: the canonical upper-triangle
// bits left-aligned in a 64-bit word (bit t of the row-major string at
// position 63-t), so integer order equals code order for equal n.
std::uint64_t canonical_bits(const Graph& g);

CanonicalCode code_from_bits(int n, std::uint64_t bits_left_aligned);
std::uint64_t bits_from_code(const CanonicalCode& code);

// Row-major upper-triangle bits of the subgraph induced by subset[0..k),
// right-aligned (pair t in bit t).  Requires k <= 8.
std::uint32_t labeled_bits(const Graph& g, const int* subset, int k);

// Canonical bits (left-aligned) for a k-vertex graph given by right-aligned
// labeled bits; memoized in a direct-indexed table for k <= 7.
std::uint64_t canonical_bits_cached(int k, std::uint32_t labeled_right);

}  // namespace deckforge

template <>
struct std::hash<deckforge::CanonicalCode> {
    std::size_t operator()(const deckforge::CanonicalCode& c) const noexcept {
        return std::hash<std::string>{}(c.bytes);
    }
};
