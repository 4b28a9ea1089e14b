#ifndef CLIQUEBETTI_BLOCK_ENCODING_HPP
#define CLIQUEBETTI_BLOCK_ENCODING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cliquebetti/chain_complex.hpp"

namespace cliquebetti {

/// Explicit unitary dilation carrying a subnormalized operator in its
/// top-left block. Basis ordering is (ancilla, system) row-major, so the
/// encoded block sits at indices [0, dim) x [0, dim).
struct BlockEncoding {
    std::int64_t dim = 0;          // encoded operator dimension
    std::int64_t ancilla_dim = 1;  // dilation factor
    Eigen::MatrixXcd unitary;      // (ancilla_dim * dim)^2
    Eigen::MatrixXcd encoded;      // intended top-left block
    double subnormalization = 1.0; // factor dividing the original target

    std::int64_t total_dim() const { return ancilla_dim * dim; }
    Eigen::MatrixXcd top_left_block() const { return unitary.topLeftCorner(dim, dim); }
};

/// || U^dagger U - I || in operator (spectral) norm.
double unitarity_defect(const BlockEncoding& be);

/// || top-left block - encoded || in operator norm.
double block_defect(const BlockEncoding& be);

/// Two-block unitary completion of a contraction: the defect blocks are
/// square roots of I - A A^dagger and I - A^dagger A. Requires ||A|| <= 1
/// (tolerance 1e-12).
BlockEncoding dilate(const Eigen::MatrixXcd& a);

struct ActionCheck {
    double residual = 0.0;             // || projected output - A phi ||
    double orthogonality_defect = 0.0; // | <flagged output, garbage> |
};

/// Applies the unitary to |0>|phi| and compares the flagged component with
/// A phi. phi must be a unit vector.
ActionCheck verify_action(const BlockEncoding& be, const Eigen::VectorXcd& phi);

/// Product encoding: the encoded block is a.encoded * b.encoded, ancilla
/// dimensions multiply.
BlockEncoding compose_product(const BlockEncoding& a, const BlockEncoding& b);

/// Tensor-product encoding of all inputs.
BlockEncoding compose_tensor(std::span<const BlockEncoding> parts);

/// Uniform linear combination: encodes sum_i signs[i] * A_i / m over m
/// same-dimension inputs.
BlockEncoding compose_lcu(std::span<const BlockEncoding> parts, std::span<const int> signs);

/// Rescale: encodes A / p for p > 1.
BlockEncoding scale(const BlockEncoding& be, double p);

/// Block encoding of the normalized Gram M^T M / ((r+1)|S_r|), built by
/// dilating the explicitly assembled operator; subnormalization records the
/// (r+1)|S_r| factor.
BlockEncoding encode_gram(const BoundaryMatrix& m);

} // namespace cliquebetti

#endif
