#include "cliquebetti/block_encoding.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace cliquebetti {

namespace {

double operator_norm(const Eigen::MatrixXcd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

// Hermitian PSD square root with small negative eigenvalues clamped to zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    Eigen::VectorXd vals = es.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        vals(i) = vals(i) > 0.0 ? std::sqrt(vals(i)) : 0.0;
    return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace

double unitarity_defect(const BlockEncoding& be) {
    const Eigen::MatrixXcd gram = be.unitary.adjoint() * be.unitary;
    return operator_norm(gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()));
}

double block_defect(const BlockEncoding& be) {
    if (be.dim == 0) return 0.0;
    return operator_norm(be.top_left_block() - be.encoded);
}

BlockEncoding dilate(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols())
        raise(ErrorCode::InvalidArgument, "dilation requires a square matrix");
    BlockEncoding be;
    be.dim = a.rows();
    be.ancilla_dim = 2;
    be.encoded = a;
    be.subnormalization = 1.0;
    if (be.dim == 0) {
        be.unitary = Eigen::MatrixXcd::Zero(0, 0);
        return be;
    }

    const double norm = operator_norm(a);
    if (norm > 1.0 + 1e-12)
        raise(ErrorCode::Precondition,
              "operator norm " + std::to_string(norm) + " exceeds 1; cannot dilate");

    const std::int64_t d = be.dim;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    // U = [ A, sqrt(I - A A^dag) ; sqrt(I - A^dag A), -A^dag ] is unitary for
    // any contraction A, by A f(A^dag A) = f(A A^dag) A.
    const Eigen::MatrixXcd defect_left = psd_sqrt(id - a * a.adjoint());
    const Eigen::MatrixXcd defect_right = psd_sqrt(id - a.adjoint() * a);
    be.unitary = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    be.unitary.topLeftCorner(d, d) = a;
    be.unitary.topRightCorner(d, d) = defect_left;
    be.unitary.bottomLeftCorner(d, d) = defect_right;
    be.unitary.bottomRightCorner(d, d) = -a.adjoint();
    return be;
}

ActionCheck verify_action(const BlockEncoding& be, const Eigen::VectorXcd& phi) {
    if (phi.size() != be.dim)
        raise(ErrorCode::Structure, "probe vector does not match the encoded dimension");
    if (std::abs(phi.norm() - 1.0) > 1e-9)
        raise(ErrorCode::Precondition, "probe vector must be normalized");

    Eigen::VectorXcd input = Eigen::VectorXcd::Zero(be.total_dim());
    input.head(be.dim) = phi; // ancilla flag |0>
    const Eigen::VectorXcd output = be.unitary * input;
    const Eigen::VectorXcd flagged = output.head(be.dim);
    const Eigen::VectorXcd expected = be.encoded * phi;

    ActionCheck check;
    check.residual = (flagged - expected).norm();
    // garbage = output - |0> (x) A phi; its overlap with the flagged target
    // must vanish for an exact encoding.
    Eigen::VectorXcd garbage = output;
    garbage.head(be.dim) -= expected;
    const std::complex<double> overlap = expected.adjoint() * garbage.head(be.dim);
    check.orthogonality_defect = std::abs(overlap);
    return check;
}

namespace {

// Basis order (ancilla_a, ancilla_b, system). Lifts U_a to act on
// (ancilla_a, system) and U_b to act on (ancilla_b, system).
Eigen::MatrixXcd lift_outer(const Eigen::MatrixXcd& u, std::int64_t p, std::int64_t q,
                            std::int64_t d) {
    const std::int64_t total = p * q * d;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(total, total);
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t s = 0; s < d; ++s)
            for (std::int64_t i2 = 0; i2 < p; ++i2)
                for (std::int64_t s2 = 0; s2 < d; ++s2) {
                    const std::complex<double> v = u(i * d + s, i2 * d + s2);
                    if (v == std::complex<double>(0, 0)) continue;
                    for (std::int64_t j = 0; j < q; ++j)
                        out((i * q + j) * d + s, (i2 * q + j) * d + s2) = v;
                }
    return out;
}

Eigen::MatrixXcd lift_inner(const Eigen::MatrixXcd& u, std::int64_t p, std::int64_t q,
                            std::int64_t d) {
    const std::int64_t total = p * q * d;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(total, total);
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = 0; j < q; ++j)
            for (std::int64_t s = 0; s < d; ++s)
                for (std::int64_t j2 = 0; j2 < q; ++j2)
                    for (std::int64_t s2 = 0; s2 < d; ++s2)
                        out((i * q + j) * d + s, (i * q + j2) * d + s2) =
                            u(j * d + s, j2 * d + s2);
    return out;
}

} // namespace

BlockEncoding compose_product(const BlockEncoding& a, const BlockEncoding& b) {
    if (a.dim != b.dim)
        raise(ErrorCode::Structure, "product composition requires equal encoded dimensions");
    BlockEncoding be;
    be.dim = a.dim;
    be.ancilla_dim = a.ancilla_dim * b.ancilla_dim;
    be.encoded = a.encoded * b.encoded;
    be.subnormalization = a.subnormalization * b.subnormalization;
    // Apply b first, then a; the joint flag is both ancillas at |0>.
    const Eigen::MatrixXcd ua = lift_outer(a.unitary, a.ancilla_dim, b.ancilla_dim, a.dim);
    const Eigen::MatrixXcd ub = lift_inner(b.unitary, a.ancilla_dim, b.ancilla_dim, a.dim);
    be.unitary = ua * ub;
    return be;
}

BlockEncoding compose_tensor(std::span<const BlockEncoding> parts) {
    if (parts.empty())
        raise(ErrorCode::InvalidArgument, "tensor composition needs at least one input");

    // Kronecker product over (ancilla_i, system_i) pairs, then permute the
    // basis to (ancilla_1..ancilla_m, system_1..system_m).
    Eigen::MatrixXcd kron = parts[0].unitary;
    Eigen::MatrixXcd encoded = parts[0].encoded;
    std::vector<std::int64_t> anc_dims{parts[0].ancilla_dim};
    std::vector<std::int64_t> sys_dims{parts[0].dim};
    double subnorm = parts[0].subnormalization;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto& p = parts[i];
        Eigen::MatrixXcd next(kron.rows() * p.unitary.rows(), kron.cols() * p.unitary.cols());
        for (Eigen::Index r = 0; r < kron.rows(); ++r)
            for (Eigen::Index c = 0; c < kron.cols(); ++c)
                next.block(r * p.unitary.rows(), c * p.unitary.cols(), p.unitary.rows(),
                           p.unitary.cols()) = kron(r, c) * p.unitary;
        kron = std::move(next);
        Eigen::MatrixXcd enc_next(encoded.rows() * p.encoded.rows(),
                                  encoded.cols() * p.encoded.cols());
        for (Eigen::Index r = 0; r < encoded.rows(); ++r)
            for (Eigen::Index c = 0; c < encoded.cols(); ++c)
                enc_next.block(r * p.encoded.rows(), c * p.encoded.cols(), p.encoded.rows(),
                               p.encoded.cols()) = encoded(r, c) * p.encoded;
        encoded = std::move(enc_next);
        anc_dims.push_back(p.ancilla_dim);
        sys_dims.push_back(p.dim);
        subnorm *= p.subnormalization;
    }

    const std::size_t m = anc_dims.size();
    std::int64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= anc_dims[i] * sys_dims[i];

    // permutation[new_index] = old_index, where the old basis interleaves
    // (a_1, s_1, ..., a_m, s_m) and the new basis groups ancillas first.
    std::vector<std::int64_t> perm(static_cast<std::size_t>(total));
    std::vector<std::int64_t> a_idx(m), s_idx(m);
    for (std::int64_t newi = 0; newi < total; ++newi) {
        std::int64_t rem = newi;
        for (std::size_t i = m; i-- > 0;) {
            s_idx[i] = rem % sys_dims[i];
            rem /= sys_dims[i];
        }
        for (std::size_t i = m; i-- > 0;) {
            a_idx[i] = rem % anc_dims[i];
            rem /= anc_dims[i];
        }
        std::int64_t old = 0;
        for (std::size_t i = 0; i < m; ++i)
            old = (old * anc_dims[i] + a_idx[i]) * sys_dims[i] + s_idx[i];
        perm[static_cast<std::size_t>(newi)] = old;
    }

    BlockEncoding be;
    be.dim = 1;
    be.ancilla_dim = 1;
    for (std::size_t i = 0; i < m; ++i) {
        be.dim *= sys_dims[i];
        be.ancilla_dim *= anc_dims[i];
    }
    be.encoded = std::move(encoded);
    be.subnormalization = subnorm;
    be.unitary = Eigen::MatrixXcd::Zero(total, total);
    for (std::int64_t r = 0; r < total; ++r)
        for (std::int64_t c = 0; c < total; ++c)
            be.unitary(r, c) = kron(perm[static_cast<std::size_t>(r)],
                                    perm[static_cast<std::size_t>(c)]);
    return be;
}

namespace {

// Real orthogonal matrix whose first column is the uniform unit vector,
// via the Householder reflection mapping e_0 to it.
Eigen::MatrixXcd uniform_prep(std::int64_t m) {
    Eigen::VectorXd target = Eigen::VectorXd::Constant(m, 1.0 / std::sqrt(static_cast<double>(m)));
    Eigen::VectorXd v = target;
    v(0) -= 1.0;
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(m, m);
    const double vnorm2 = v.squaredNorm();
    if (vnorm2 > 0) h -= (2.0 / vnorm2) * (v * v.transpose());
    return h.cast<std::complex<double>>();
}

} // namespace

BlockEncoding compose_lcu(std::span<const BlockEncoding> parts, std::span<const int> signs) {
    if (parts.empty())
        raise(ErrorCode::InvalidArgument, "linear combination needs at least one input");
    if (signs.size() != parts.size())
        raise(ErrorCode::InvalidArgument, "one sign per encoding is required");
    const std::int64_t d = parts[0].dim;
    std::int64_t anc = 1;
    for (const auto& p : parts) {
        if (p.dim != d)
            raise(ErrorCode::Structure, "linear combination requires equal encoded dimensions");
        anc = std::lcm(anc, p.ancilla_dim);
    }
    for (int s : signs)
        if (s != 1 && s != -1)
            raise(ErrorCode::InvalidArgument, "signs must be +1 or -1");

    const std::int64_t m = static_cast<std::int64_t>(parts.size());
    const std::int64_t inner = anc * d;
    const std::int64_t total = m * inner;

    // SELECT: block-diagonal over the mixing register; each input unitary is
    // padded (identity on extra ancilla copies keeps the encoding) and
    // multiplied by its sign.
    Eigen::MatrixXcd select = Eigen::MatrixXcd::Zero(total, total);
    for (std::int64_t j = 0; j < m; ++j) {
        const auto& p = parts[static_cast<std::size_t>(j)];
        const std::int64_t copies = anc / p.ancilla_dim;
        Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(inner, inner);
        for (std::int64_t c = 0; c < copies; ++c)
            padded.block(c * p.ancilla_dim * d, c * p.ancilla_dim * d, p.ancilla_dim * d,
                         p.ancilla_dim * d) = p.unitary;
        select.block(j * inner, j * inner, inner, inner) =
            static_cast<double>(signs[static_cast<std::size_t>(j)]) * padded;
    }

    // PREP / UNPREP with the uniform state on the mixing register.
    const Eigen::MatrixXcd prep = uniform_prep(m);
    Eigen::MatrixXcd prep_full = Eigen::MatrixXcd::Zero(total, total);
    for (std::int64_t j = 0; j < m; ++j)
        for (std::int64_t j2 = 0; j2 < m; ++j2)
            prep_full.block(j * inner, j2 * inner, inner, inner) =
                prep(j, j2) * Eigen::MatrixXcd::Identity(inner, inner);

    BlockEncoding be;
    be.dim = d;
    be.ancilla_dim = m * anc;
    be.unitary = prep_full.adjoint() * select * prep_full;
    be.encoded = Eigen::MatrixXcd::Zero(d, d);
    for (std::int64_t j = 0; j < m; ++j)
        be.encoded += (static_cast<double>(signs[static_cast<std::size_t>(j)]) /
                       static_cast<double>(m)) *
                      parts[static_cast<std::size_t>(j)].encoded;
    double max_subnorm = 0.0;
    for (const auto& p : parts) max_subnorm = std::max(max_subnorm, p.subnormalization);
    be.subnormalization = static_cast<double>(m) * max_subnorm;
    return be;
}

BlockEncoding scale(const BlockEncoding& be, double p) {
    if (!(p > 1.0))
        raise(ErrorCode::InvalidArgument, "scale factor must exceed 1");
    // Compose with an encoding of (1/p) * I on the same system.
    const Eigen::MatrixXcd scaled_id =
        (1.0 / p) * Eigen::MatrixXcd::Identity(be.dim, be.dim);
    BlockEncoding result = compose_product(dilate(scaled_id), be);
    result.subnormalization = be.subnormalization * p;
    return result;
}

BlockEncoding encode_gram(const BoundaryMatrix& m) {
    const GramOperator gram(m);
    if (gram.dim() == 0) {
        BlockEncoding be;
        be.dim = 0;
        be.ancilla_dim = 2;
        be.unitary = Eigen::MatrixXcd::Zero(0, 0);
        be.encoded = Eigen::MatrixXcd::Zero(0, 0);
        be.subnormalization = 1.0;
        return be;
    }
    BlockEncoding be = dilate(gram.dense().cast<std::complex<double>>());
    be.subnormalization = gram.normalization();
    return be;
}

} // namespace cliquebetti
