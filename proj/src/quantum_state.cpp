#include "cliquebetti/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cliquebetti {

namespace {

std::int64_t product_dim(const std::vector<int>& dims) {
    std::int64_t total = 1;
    for (int d : dims) {
        if (d < 2) raise(ErrorCode::InvalidArgument, "local dimensions must be at least 2");
        total *= d;
        if (total > kMaxHilbertDim)
            raise(ErrorCode::Limit, "total Hilbert dimension exceeds the guard of " +
                                        std::to_string(kMaxHilbertDim));
    }
    return total;
}

void validate_density(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != rho.cols())
        raise(ErrorCode::Structure, "density matrix must be square");
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10)
        raise(ErrorCode::Precondition, "density matrix is not Hermitian (defect " +
                                           std::to_string(herm) + ")");
    const double trace_err = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
    if (trace_err > 1e-10)
        raise(ErrorCode::Precondition, "density matrix trace differs from 1 by " +
                                           std::to_string(trace_err));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        raise(ErrorCode::Precondition, "density matrix is not positive semidefinite");
}

} // namespace

DensityMatrix::DensityMatrix(std::vector<int> local_dims, Eigen::MatrixXcd rho)
    : local_dims_(std::move(local_dims)), rho_(std::move(rho)) {
    if (local_dims_.empty())
        raise(ErrorCode::InvalidArgument, "at least one subsystem is required");
    const std::int64_t expect = product_dim(local_dims_);
    if (rho_.rows() != expect)
        raise(ErrorCode::Structure, "matrix dimension " + std::to_string(rho_.rows()) +
                                        " does not match subsystem dimensions (product " +
                                        std::to_string(expect) + ")");
    validate_density(rho_);
}

DensityMatrix DensityMatrix::pure_state(const Eigen::VectorXcd& psi,
                                        std::vector<int> local_dims) {
    const double norm = psi.norm();
    if (norm <= 0.0)
        raise(ErrorCode::InvalidArgument, "state vector must be nonzero");
    Eigen::VectorXcd unit = psi / norm;
    return DensityMatrix(std::move(local_dims), unit * unit.adjoint());
}

DensityMatrix DensityMatrix::bell() { return ghz(2); }

DensityMatrix DensityMatrix::ghz(int num_qubits) {
    if (num_qubits < 2)
        raise(ErrorCode::InvalidArgument, "ghz requires at least 2 qubits");
    const std::int64_t dim = std::int64_t{1} << num_qubits;
    if (dim > kMaxHilbertDim)
        raise(ErrorCode::Limit, "ghz size exceeds the exact-diagonalization guard");
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi(0) = 1.0 / std::sqrt(2.0);
    psi(dim - 1) = 1.0 / std::sqrt(2.0);
    return pure_state(psi, std::vector<int>(static_cast<std::size_t>(num_qubits), 2));
}

DensityMatrix DensityMatrix::product_zero(int num_qubits) {
    if (num_qubits < 1)
        raise(ErrorCode::InvalidArgument, "product state requires at least 1 qubit");
    const std::int64_t dim = std::int64_t{1} << num_qubits;
    if (dim > kMaxHilbertDim)
        raise(ErrorCode::Limit, "product size exceeds the exact-diagonalization guard");
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi(0) = 1.0;
    return pure_state(psi, std::vector<int>(static_cast<std::size_t>(num_qubits), 2));
}

DensityMatrix DensityMatrix::random_pure(int num_qubits, std::uint64_t seed) {
    if (num_qubits < 1)
        raise(ErrorCode::InvalidArgument, "random state requires at least 1 qubit");
    const std::int64_t dim = std::int64_t{1} << num_qubits;
    if (dim > kMaxHilbertDim)
        raise(ErrorCode::Limit, "random state size exceeds the exact-diagonalization guard");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd psi(dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        psi(i) = std::complex<double>(re, im);
    }
    return pure_state(psi, std::vector<int>(static_cast<std::size_t>(num_qubits), 2));
}

bool DensityMatrix::all_qubits() const {
    return std::all_of(local_dims_.begin(), local_dims_.end(), [](int d) { return d == 2; });
}

DensityMatrix reduced_density(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = rho.num_subsystems();
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty())
        raise(ErrorCode::InvalidArgument, "keep set must be nonempty");
    for (int idx : kept)
        if (idx < 0 || idx >= n)
            raise(ErrorCode::InvalidArgument,
                  "subsystem index " + std::to_string(idx) + " out of range");

    const auto& dims = rho.local_dims();
    std::vector<int> traced;
    for (int i = 0; i < n; ++i)
        if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);

    std::int64_t keep_dim = 1, trace_dim = 1;
    for (int i : kept) keep_dim *= dims[static_cast<std::size_t>(i)];
    for (int i : traced) trace_dim *= dims[static_cast<std::size_t>(i)];

    // Strides of each subsystem in the row-major composite index.
    std::vector<std::int64_t> stride(static_cast<std::size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i)
        stride[static_cast<std::size_t>(i)] =
            stride[static_cast<std::size_t>(i) + 1] * dims[static_cast<std::size_t>(i) + 1];

    auto expand = [&](std::int64_t composite, const std::vector<int>& subsystems) {
        std::int64_t base = 0;
        for (auto it = subsystems.rbegin(); it != subsystems.rend(); ++it) {
            const int sub = *it;
            const std::int64_t d = dims[static_cast<std::size_t>(sub)];
            base += (composite % d) * stride[static_cast<std::size_t>(sub)];
            composite /= d;
        }
        return base;
    };

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(keep_dim, keep_dim);
    for (std::int64_t a = 0; a < keep_dim; ++a) {
        const std::int64_t abase = expand(a, kept);
        for (std::int64_t b = 0; b < keep_dim; ++b) {
            const std::int64_t bbase = expand(b, kept);
            std::complex<double> sum = 0.0;
            for (std::int64_t c = 0; c < trace_dim; ++c) {
                const std::int64_t cbase = expand(c, traced);
                sum += rho.matrix()(abase + cbase, bbase + cbase);
            }
            out(a, b) = sum;
        }
    }

    std::vector<int> out_dims;
    for (int i : kept) out_dims.push_back(dims[static_cast<std::size_t>(i)]);
    return DensityMatrix(std::move(out_dims), std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix(), Eigen::EigenvaluesOnly);
    double entropy = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double p = es.eigenvalues()(i);
        if (p > 1e-15) entropy -= p * std::log(p);
    }
    return entropy;
}

Eigen::MatrixXd mutual_information_matrix(const DensityMatrix& rho) {
    const int n = rho.num_subsystems();
    if (rho.total_dim() > kMaxHilbertDim)
        raise(ErrorCode::Limit, "mutual information is limited to total dimension " +
                                    std::to_string(kMaxHilbertDim));
    std::vector<double> single(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        single[static_cast<std::size_t>(i)] = von_neumann_entropy(reduced_density(rho, {i}));

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double joint = von_neumann_entropy(reduced_density(rho, {i, j}));
            const double mij = single[static_cast<std::size_t>(i)] +
                               single[static_cast<std::size_t>(j)] - joint;
            m(i, j) = mij;
            m(j, i) = mij;
        }
    return m;
}

Eigen::MatrixXd distances_from_mutual_information(const Eigen::MatrixXd& m) {
    const double offset = 2.0 * std::log(2.0);
    Eigen::MatrixXd d(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            d(i, j) = i == j ? 0.0 : std::max(0.0, offset - m(i, j));
    return d;
}

Eigen::MatrixXd entanglement_distances(const DensityMatrix& rho) {
    if (!rho.all_qubits())
        raise(ErrorCode::Unsupported,
              "the 2 ln 2 distance offset applies to qubit subsystems only");
    return distances_from_mutual_information(mutual_information_matrix(rho));
}

} // namespace cliquebetti
