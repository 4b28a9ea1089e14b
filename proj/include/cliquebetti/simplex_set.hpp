#ifndef CLIQUEBETTI_SIMPLEX_SET_HPP
#define CLIQUEBETTI_SIMPLEX_SET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cliquebetti/graph.hpp"

namespace cliquebetti {

/// The ordered set S_r of r-simplices of a clique complex on n vertices.
/// Simplices are ascending (r+1)-tuples in global lexicographic order.
struct SimplexSet {
    int r = 0;
    std::int64_t n = 0;
    std::vector<std::vector<VertexId>> simplices;

    std::int64_t size() const { return static_cast<std::int64_t>(simplices.size()); }

    /// n-bit encoding of simplex `idx`: character i is '1' iff vertex i is a
    /// member, so the string has Hamming weight r+1.
    std::string encoding(std::int64_t idx) const;
    std::vector<std::string> encodings() const;
};

/// Bitstring encoding of one ascending vertex tuple.
std::string encode_simplex(std::span<const VertexId> tuple, std::int64_t n);

} // namespace cliquebetti

#endif
