#include "cliquebetti/exact_rank.hpp"

namespace cliquebetti {

std::int64_t exact_rank(const IntDense& m) {
    const std::int64_t rows = m.rows;
    const std::int64_t cols = m.cols;
    if (rows == 0 || cols == 0) return 0;

    std::vector<BigInt> a(m.a.begin(), m.a.end());
    auto at = [&](std::int64_t i, std::int64_t j) -> BigInt& {
        return a[static_cast<std::size_t>(i * cols + j)];
    };

    BigInt prev_pivot = 1;
    std::int64_t pivot_row = 0;
    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::int64_t found = -1;
        for (std::int64_t i = pivot_row; i < rows; ++i)
            if (at(i, col) != 0) {
                found = i;
                break;
            }
        if (found < 0) continue;
        if (found != pivot_row)
            for (std::int64_t j = col; j < cols; ++j)
                std::swap(at(found, j), at(pivot_row, j));

        const BigInt pivot = at(pivot_row, col);
        for (std::int64_t i = pivot_row + 1; i < rows; ++i) {
            const BigInt factor = at(i, col);
            at(i, col) = 0;
            // Bareiss one-step update; the division by the previous pivot is
            // exact because every intermediate entry is a minor of the
            // original matrix. Rows with factor 0 still need the rescaling.
            for (std::int64_t j = col + 1; j < cols; ++j) {
                if (factor == 0) {
                    if (at(i, j) != 0) at(i, j) = at(i, j) * pivot / prev_pivot;
                } else {
                    at(i, j) = (at(i, j) * pivot - factor * at(pivot_row, j)) / prev_pivot;
                }
            }
        }
        prev_pivot = pivot;
        ++pivot_row;
        ++rank;
    }
    return rank;
}

} // namespace cliquebetti
