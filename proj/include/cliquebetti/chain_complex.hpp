#ifndef CLIQUEBETTI_CHAIN_COMPLEX_HPP
#define CLIQUEBETTI_CHAIN_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cliquebetti/clique_enum.hpp"
#include "cliquebetti/exact_rank.hpp"
#include "cliquebetti/simplex_set.hpp"

namespace cliquebetti {

/// C(n, k) with overflow detection; raises a limit error when the count does
/// not fit in a signed 64-bit integer.
std::int64_t binomial_checked(std::int64_t n, std::int64_t k);

/// Colex rank of an ascending tuple among all ascending |tuple|-subsets of
/// 0..n-1: rank = sum_i C(tuple[i], i+1).
std::int64_t colex_rank(std::span<const VertexId> tuple);

struct BoundaryEntry {
    std::int64_t row = 0; // colex rank of the face among all C(n, r) tuples
    std::int64_t col = 0; // column in S_r order
    int sign = 0;         // +1 or -1
};

/// Sparse signed matrix realizing the boundary map on S_r. Columns follow
/// the lexicographic simplex order of the SimplexSet; rows range over all
/// C(n, r) ascending r-tuples, indexed by colex rank (rows for faces outside
/// the complex simply stay empty). For r = 0 the matrix is the 0 x |S_0|
/// zero map.
class BoundaryMatrix {
public:
    BoundaryMatrix() = default;
    BoundaryMatrix(int r, std::int64_t n, std::int64_t rows, std::int64_t cols,
                   std::vector<BoundaryEntry> entries);

    int r() const { return r_; }
    std::int64_t n() const { return n_; }
    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    const std::vector<BoundaryEntry>& entries() const { return entries_; }

    /// Number of structurally nonzero rows (distinct face ranks).
    std::int64_t compact_rows() const { return static_cast<std::int64_t>(row_ranks_.size()); }
    const std::vector<std::int64_t>& row_ranks() const { return row_ranks_; }

    std::int64_t frobenius_norm_sq() const { return static_cast<std::int64_t>(entries_.size()); }

    /// y = M x with rows compacted to the nonzero row set.
    void apply(std::span<const double> x, std::span<double> y) const;
    /// y = M^T x over the compacted rows.
    void apply_transpose(std::span<const double> x, std::span<double> y) const;

    /// Dense integer Gram matrix M^T M (unnormalized).
    IntDense gram_integer() const;
    /// Dense double copy over compacted rows.
    Eigen::MatrixXd dense_compact() const;

private:
    int r_ = 0;
    std::int64_t n_ = 0;
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<BoundaryEntry> entries_;       // column-major order
    std::vector<std::int64_t> row_ranks_;      // sorted distinct ranks
    std::vector<std::int64_t> compact_row_;    // per entry, index into row_ranks_
    std::vector<std::int64_t> col_start_;      // CSC offsets into entries_
};

/// Assembles the boundary matrix of S_r: the column of [p_0..p_r] holds
/// (-1)^i at the row of the face omitting p_i.
BoundaryMatrix boundary_matrix(const SimplexSet& s_r);

/// Symmetric PSD operator M^T M / ((r+1)|S_r|); the estimator consumes it
/// through matrix-vector products only, so the sparse factor is retained and
/// the dense form materialized on demand.
class GramOperator {
public:
    GramOperator() = default;
    explicit GramOperator(BoundaryMatrix m);

    std::int64_t dim() const { return matrix_.cols(); }
    double normalization() const { return normalization_; }
    const BoundaryMatrix& factor() const { return matrix_; }

    /// y = (M^T M x) / normalization. Safe to call concurrently.
    void apply(std::span<const double> x, std::span<double> y) const;

    /// Normalized dense matrix.
    Eigen::MatrixXd dense() const;
    /// Unnormalized integer Gram matrix, for the exact oracle.
    IntDense dense_integer() const { return matrix_.gram_integer(); }

private:
    BoundaryMatrix matrix_;
    double normalization_ = 1.0;
};

GramOperator gram_operator(BoundaryMatrix m);

/// Combinatorial Laplacian on S_r: the up term restricts the rows of m_up to
/// the simplices of s_r, the down term is the Gram of m_r. Exact integers.
IntDense combinatorial_laplacian(const SimplexSet& s_r, const BoundaryMatrix& m_r,
                                 const BoundaryMatrix& m_up);

/// dim ker = cols - rank, rank computed exactly over the rationals.
std::int64_t exact_kernel_dim(const BoundaryMatrix& m);

/// Floating-point rank via SVD: singular values above
/// 1e-10 * max(rows, cols) * sigma_max count toward the rank.
std::int64_t float_rank(const Eigen::MatrixXd& m);

/// Verifies that the composite boundary-of-boundary vanishes, in exact
/// integer arithmetic. s_r must be the face set matching m_r's columns.
bool boundary_composition_is_zero(const SimplexSet& s_r, const BoundaryMatrix& m_r,
                                  const BoundaryMatrix& m_up);

/// Exact r-th Betti number of the clique complex of g, via
/// beta_r = dim ker d_r + dim ker d_{r+1} - |S_{r+1}|. For small complexes
/// the result is cross-checked against the Laplacian kernel dimension.
std::int64_t exact_betti(const Graph& g, int r,
                         CliqueStrategy strategy = CliqueStrategy::Auto);

/// All Betti numbers beta_0..beta_r_max in one pass over shared simplex sets.
std::vector<std::int64_t> exact_betti_all(const Graph& g, int r_max,
                                          CliqueStrategy strategy = CliqueStrategy::Auto);

} // namespace cliquebetti

#endif
