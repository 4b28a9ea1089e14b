#include "cliquebetti/chain_complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace cliquebetti {

std::int64_t binomial_checked(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0) return 0;
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is exact at every step
        std::int64_t num = n - k + i;
        if (result > std::numeric_limits<std::int64_t>::max() / num)
            raise(ErrorCode::Limit, "binomial coefficient C(" + std::to_string(n) + "," +
                                        std::to_string(k) + ") exceeds 64-bit range");
        result = result * num / i;
    }
    return result;
}

std::int64_t colex_rank(std::span<const VertexId> tuple) {
    std::int64_t rank = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        rank += binomial_checked(tuple[i], static_cast<std::int64_t>(i) + 1);
    return rank;
}

BoundaryMatrix::BoundaryMatrix(int r, std::int64_t n, std::int64_t rows, std::int64_t cols,
                               std::vector<BoundaryEntry> entries)
    : r_(r), n_(n), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.sign != 1 && e.sign != -1)
            raise(ErrorCode::Structure, "boundary entries must be +1 or -1");
        if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_)
            raise(ErrorCode::Structure, "boundary entry out of range");
    }
    std::sort(entries_.begin(), entries_.end(), [](const BoundaryEntry& a, const BoundaryEntry& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });

    row_ranks_.reserve(entries_.size());
    for (const auto& e : entries_) row_ranks_.push_back(e.row);
    std::sort(row_ranks_.begin(), row_ranks_.end());
    row_ranks_.erase(std::unique(row_ranks_.begin(), row_ranks_.end()), row_ranks_.end());

    compact_row_.reserve(entries_.size());
    for (const auto& e : entries_) {
        auto it = std::lower_bound(row_ranks_.begin(), row_ranks_.end(), e.row);
        compact_row_.push_back(it - row_ranks_.begin());
    }

    col_start_.assign(static_cast<std::size_t>(cols_) + 1, 0);
    for (const auto& e : entries_) ++col_start_[static_cast<std::size_t>(e.col) + 1];
    for (std::size_t c = 1; c < col_start_.size(); ++c) col_start_[c] += col_start_[c - 1];
}

void BoundaryMatrix::apply(std::span<const double> x, std::span<double> y) const {
    if (static_cast<std::int64_t>(x.size()) != cols_ ||
        static_cast<std::int64_t>(y.size()) != compact_rows())
        raise(ErrorCode::Structure, "boundary apply: dimension mismatch");
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        y[static_cast<std::size_t>(compact_row_[i])] +=
            static_cast<double>(e.sign) * x[static_cast<std::size_t>(e.col)];
    }
}

void BoundaryMatrix::apply_transpose(std::span<const double> x, std::span<double> y) const {
    if (static_cast<std::int64_t>(x.size()) != compact_rows() ||
        static_cast<std::int64_t>(y.size()) != cols_)
        raise(ErrorCode::Structure, "boundary apply_transpose: dimension mismatch");
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        y[static_cast<std::size_t>(e.col)] +=
            static_cast<double>(e.sign) * x[static_cast<std::size_t>(compact_row_[i])];
    }
}

IntDense BoundaryMatrix::gram_integer() const {
    IntDense g = IntDense::zeros(cols_, cols_);
    // Row-wise accumulation: every pair of entries sharing a face
    // contributes sign_a * sign_b to G[col_a][col_b].
    std::vector<std::vector<std::pair<std::int64_t, int>>> by_row(
        static_cast<std::size_t>(compact_rows()));
    for (std::size_t i = 0; i < entries_.size(); ++i)
        by_row[static_cast<std::size_t>(compact_row_[i])].emplace_back(entries_[i].col,
                                                                       entries_[i].sign);
    for (const auto& row : by_row)
        for (const auto& [ca, sa] : row)
            for (const auto& [cb, sb] : row) g.at(ca, cb) += sa * sb;
    return g;
}

Eigen::MatrixXd BoundaryMatrix::dense_compact() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(compact_rows(), cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        m(compact_row_[i], entries_[i].col) = static_cast<double>(entries_[i].sign);
    return m;
}

BoundaryMatrix boundary_matrix(const SimplexSet& s_r) {
    if (s_r.r == 0)
        return BoundaryMatrix(0, s_r.n, 0, s_r.size(), {});

    const std::int64_t rows = binomial_checked(s_r.n, s_r.r);
    std::vector<BoundaryEntry> entries;
    entries.reserve(static_cast<std::size_t>(s_r.size()) *
                    (static_cast<std::size_t>(s_r.r) + 1));
    std::vector<VertexId> face(static_cast<std::size_t>(s_r.r));
    for (std::int64_t j = 0; j < s_r.size(); ++j) {
        const auto& simplex = s_r.simplices[static_cast<std::size_t>(j)];
        for (int omit = 0; omit <= s_r.r; ++omit) {
            std::size_t fi = 0;
            for (int i = 0; i <= s_r.r; ++i)
                if (i != omit) face[fi++] = simplex[static_cast<std::size_t>(i)];
            const int sign = (omit % 2 == 0) ? 1 : -1;
            entries.push_back({colex_rank({face.data(), face.size()}), j, sign});
        }
    }
    return BoundaryMatrix(s_r.r, s_r.n, rows, s_r.size(), std::move(entries));
}

namespace {

// Power iteration estimate of the spectral norm of the normalized Gram;
// deterministic start vector.
double estimate_spectral_norm(const GramOperator& g, int iterations = 64) {
    const std::int64_t d = g.dim();
    if (d == 0) return 0.0;
    std::vector<double> x(static_cast<std::size_t>(d));
    std::vector<double> y(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i)
        x[static_cast<std::size_t>(i)] = 1.0 + 0.37 * static_cast<double>(i % 7);
    double norm = 0.0;
    for (int it = 0; it < iterations; ++it) {
        g.apply(x, y);
        norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i] / norm;
    }
    return norm;
}

} // namespace

GramOperator::GramOperator(BoundaryMatrix m) : matrix_(std::move(m)) {
    normalization_ =
        static_cast<double>(matrix_.r() + 1) * static_cast<double>(matrix_.cols());
    if (matrix_.cols() == 0) {
        normalization_ = 1.0;
        return;
    }
    const double spectral = estimate_spectral_norm(*this);
    if (spectral > 1.0 + 1e-12)
        raise(ErrorCode::Internal,
              "normalized Gram operator has spectral norm " + std::to_string(spectral) +
                  " > 1");
}

void GramOperator::apply(std::span<const double> x, std::span<double> y) const {
    std::vector<double> tmp(static_cast<std::size_t>(matrix_.compact_rows()));
    matrix_.apply(x, tmp);
    matrix_.apply_transpose(tmp, y);
    const double inv = 1.0 / normalization_;
    for (auto& v : y) v *= inv;
}

Eigen::MatrixXd GramOperator::dense() const {
    const IntDense g = matrix_.gram_integer();
    Eigen::MatrixXd m(g.rows, g.cols);
    for (std::int64_t i = 0; i < g.rows; ++i)
        for (std::int64_t j = 0; j < g.cols; ++j)
            m(i, j) = static_cast<double>(g.at(i, j)) / normalization_;
    return m;
}

GramOperator gram_operator(BoundaryMatrix m) { return GramOperator(std::move(m)); }

namespace {

// Maps the colex rank of each simplex in s_r to its column index, to
// restrict the rows of the (r+1)-boundary to faces present in the complex.
std::unordered_map<std::int64_t, std::int64_t> rank_to_index(const SimplexSet& s_r) {
    std::unordered_map<std::int64_t, std::int64_t> map;
    map.reserve(static_cast<std::size_t>(s_r.size()));
    for (std::int64_t i = 0; i < s_r.size(); ++i) {
        const auto& t = s_r.simplices[static_cast<std::size_t>(i)];
        map.emplace(colex_rank({t.data(), t.size()}), i);
    }
    return map;
}

void check_laplacian_inputs(const SimplexSet& s_r, const BoundaryMatrix& m_r,
                            const BoundaryMatrix& m_up) {
    if (m_r.r() != s_r.r || m_r.n() != s_r.n || m_r.cols() != s_r.size())
        raise(ErrorCode::Structure, "down boundary does not match the simplex set");
    if (m_up.r() != s_r.r + 1 || m_up.n() != s_r.n)
        raise(ErrorCode::Structure, "up boundary does not match the simplex set");
}

} // namespace

IntDense combinatorial_laplacian(const SimplexSet& s_r, const BoundaryMatrix& m_r,
                                 const BoundaryMatrix& m_up) {
    check_laplacian_inputs(s_r, m_r, m_up);
    IntDense lap = m_r.gram_integer(); // down term d_r^T d_r

    // Up term: restrict m_up rows to simplices of s_r, then accumulate the
    // outer product of each column.
    const auto index_of = rank_to_index(s_r);
    std::vector<std::pair<std::int64_t, int>> column;
    const auto& entries = m_up.entries();
    std::size_t i = 0;
    while (i < entries.size()) {
        const std::int64_t col = entries[i].col;
        column.clear();
        while (i < entries.size() && entries[i].col == col) {
            auto it = index_of.find(entries[i].row);
            if (it == index_of.end())
                raise(ErrorCode::Structure,
                      "up boundary references a face outside the simplex set");
            column.emplace_back(it->second, entries[i].sign);
            ++i;
        }
        for (const auto& [ra, sa] : column)
            for (const auto& [rb, sb] : column) lap.at(ra, rb) += sa * sb;
    }
    return lap;
}

std::int64_t exact_kernel_dim(const BoundaryMatrix& m) {
    if (m.cols() == 0) return 0;
    if (m.entries().empty()) return m.cols(); // zero map
    // Only structurally nonzero rows can affect the rank.
    IntDense dense = IntDense::zeros(m.compact_rows(), m.cols());
    const auto& entries = m.entries();
    const auto& ranks = m.row_ranks();
    for (const auto& e : entries) {
        auto it = std::lower_bound(ranks.begin(), ranks.end(), e.row);
        dense.at(it - ranks.begin(), e.col) = e.sign;
    }
    return m.cols() - exact_rank(dense);
}

std::int64_t float_rank(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = 1e-10 * static_cast<double>(std::max(m.rows(), m.cols())) * sv(0);
    std::int64_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

bool boundary_composition_is_zero(const SimplexSet& s_r, const BoundaryMatrix& m_r,
                                  const BoundaryMatrix& m_up) {
    check_laplacian_inputs(s_r, m_r, m_up);
    if (s_r.r == 0) return true; // d_0 is the zero map
    const auto index_of = rank_to_index(s_r);

    // Column j of the composite: sum over entries (face_rank, sign) of m_up's
    // column j of sign * (m_r column of that face), accumulated sparsely.
    std::vector<std::vector<std::pair<std::int64_t, int>>> down_cols(
        static_cast<std::size_t>(m_r.cols()));
    for (const auto& e : m_r.entries())
        down_cols[static_cast<std::size_t>(e.col)].emplace_back(e.row, e.sign);

    std::unordered_map<std::int64_t, std::int64_t> acc;
    const auto& entries = m_up.entries();
    std::size_t i = 0;
    while (i < entries.size()) {
        const std::int64_t col = entries[i].col;
        acc.clear();
        while (i < entries.size() && entries[i].col == col) {
            auto it = index_of.find(entries[i].row);
            if (it == index_of.end())
                raise(ErrorCode::Structure,
                      "up boundary references a face outside the simplex set");
            for (const auto& [row, sign] : down_cols[static_cast<std::size_t>(it->second)])
                acc[row] += static_cast<std::int64_t>(entries[i].sign) * sign;
            ++i;
        }
        for (const auto& [row, value] : acc)
            if (value != 0) return false;
    }
    return true;
}

namespace {

// Cross-check threshold: Laplacian kernel computation is cubic with big
// integers, so it runs automatically only on small instances.
constexpr std::int64_t kLaplacianCrossCheckLimit = 96;

std::int64_t betti_from_sets(const SimplexSet& s_r, const SimplexSet& s_r1,
                             const BoundaryMatrix& m_r, const BoundaryMatrix& m_r1) {
    if (s_r.size() == 0) return 0;
    const std::int64_t ker_r = s_r.r == 0 ? s_r.size() : exact_kernel_dim(m_r);
    const std::int64_t ker_r1 = exact_kernel_dim(m_r1);
    const std::int64_t betti = ker_r + ker_r1 - s_r1.size();
    if (betti < 0)
        raise(ErrorCode::Internal, "negative Betti number from kernel identity");

    if (s_r.size() <= kLaplacianCrossCheckLimit) {
        const IntDense lap = combinatorial_laplacian(s_r, m_r, m_r1);
        const std::int64_t lap_kernel = s_r.size() - exact_rank(lap);
        if (lap_kernel != betti)
            raise(ErrorCode::Internal,
                  "Laplacian kernel dimension " + std::to_string(lap_kernel) +
                      " disagrees with Betti identity " + std::to_string(betti));
    }
    return betti;
}

} // namespace

std::int64_t exact_betti(const Graph& g, int r, CliqueStrategy strategy) {
    if (r < 0) raise(ErrorCode::InvalidArgument, "dimension r must be nonnegative");
    const auto sets = build_simplex_sets(g, r + 1, strategy);
    const auto& s_r = sets[static_cast<std::size_t>(r)];
    const auto& s_r1 = sets[static_cast<std::size_t>(r) + 1];
    return betti_from_sets(s_r, s_r1, boundary_matrix(s_r), boundary_matrix(s_r1));
}

std::vector<std::int64_t> exact_betti_all(const Graph& g, int r_max, CliqueStrategy strategy) {
    if (r_max < 0) raise(ErrorCode::InvalidArgument, "r_max must be nonnegative");
    const auto sets = build_simplex_sets(g, r_max + 1, strategy);
    std::vector<BoundaryMatrix> boundaries;
    boundaries.reserve(sets.size());
    for (const auto& s : sets) boundaries.push_back(boundary_matrix(s));
    std::vector<std::int64_t> betti;
    betti.reserve(static_cast<std::size_t>(r_max) + 1);
    for (int r = 0; r <= r_max; ++r)
        betti.push_back(betti_from_sets(sets[static_cast<std::size_t>(r)],
                                        sets[static_cast<std::size_t>(r) + 1],
                                        boundaries[static_cast<std::size_t>(r)],
                                        boundaries[static_cast<std::size_t>(r) + 1]));
    return betti;
}

} // namespace cliquebetti
