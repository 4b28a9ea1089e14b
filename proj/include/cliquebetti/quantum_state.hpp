#ifndef CLIQUEBETTI_QUANTUM_STATE_HPP
#define CLIQUEBETTI_QUANTUM_STATE_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cliquebetti/errors.hpp"
#include "cliquebetti/graph.hpp"

namespace cliquebetti {

/// Exact-diagonalization guard: total Hilbert dimension cap (12 qubits).
inline constexpr std::int64_t kMaxHilbertDim = 4096;

/// Density matrix of a multipartite system with explicit local dimensions.
class DensityMatrix {
public:
    DensityMatrix(std::vector<int> local_dims, Eigen::MatrixXcd rho);

    static DensityMatrix pure_state(const Eigen::VectorXcd& psi, std::vector<int> local_dims);
    static DensityMatrix bell();                    // (|00> + |11|)/sqrt(2)
    static DensityMatrix ghz(int num_qubits);       // (|0..0> + |1..1>)/sqrt(2)
    static DensityMatrix product_zero(int num_qubits);
    static DensityMatrix random_pure(int num_qubits, std::uint64_t seed);

    int num_subsystems() const { return static_cast<int>(local_dims_.size()); }
    const std::vector<int>& local_dims() const { return local_dims_; }
    std::int64_t total_dim() const { return rho_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return rho_; }
    bool all_qubits() const;

private:
    std::vector<int> local_dims_;
    Eigen::MatrixXcd rho_;
};

/// Partial trace keeping the listed subsystems (ascending, deduplicated).
DensityMatrix reduced_density(const DensityMatrix& rho, const std::vector<int>& keep);

/// Von Neumann entropy -Tr(rho ln rho), natural logarithm, 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Pairwise mutual information M_ij = S_i + S_j - S_ij, zero diagonal.
Eigen::MatrixXd mutual_information_matrix(const DensityMatrix& rho);

/// Mutual-information distances D_ij = 2 ln 2 - M_ij for qubit subsystems,
/// clamped at zero from below.
Eigen::MatrixXd entanglement_distances(const DensityMatrix& rho);

/// Same formula applied to a precomputed mutual-information matrix.
Eigen::MatrixXd distances_from_mutual_information(const Eigen::MatrixXd& m);

} // namespace cliquebetti

#endif
