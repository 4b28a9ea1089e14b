#ifndef CLIQUEBETTI_EXACT_RANK_HPP
#define CLIQUEBETTI_EXACT_RANK_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cliquebetti/errors.hpp"

namespace cliquebetti {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
struct IntDense {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<std::int64_t> a;

    std::int64_t& at(std::int64_t i, std::int64_t j) {
        return a[static_cast<std::size_t>(i * cols + j)];
    }
    std::int64_t at(std::int64_t i, std::int64_t j) const {
        return a[static_cast<std::size_t>(i * cols + j)];
    }
    static IntDense zeros(std::int64_t rows, std::int64_t cols) {
        IntDense m;
        m.rows = rows;
        m.cols = cols;
        m.a.assign(static_cast<std::size_t>(rows * cols), 0);
        return m;
    }
};

/// Rank over the rationals via fraction-free (Bareiss) elimination.
/// Pivots are searched column by column, ascending, taking the first row
/// with a nonzero entry; all intermediate values stay exact integers.
std::int64_t exact_rank(const IntDense& m);

} // namespace cliquebetti

#endif
