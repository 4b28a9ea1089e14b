#ifndef CLIQUEBETTI_RANK_ESTIMATION_HPP
#define CLIQUEBETTI_RANK_ESTIMATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cliquebetti/chain_complex.hpp"

namespace cliquebetti {

/// Anything the stochastic estimator touches: a symmetric operator exposed
/// through matrix-vector products only.
class LinearOperator {
public:
    virtual ~LinearOperator() = default;
    virtual std::int64_t dim() const = 0;
    virtual void apply(std::span<const double> x, std::span<double> y) const = 0;
};

/// Adapter for a dense symmetric matrix (test matrices, small operators).
class DenseOperator final : public LinearOperator {
public:
    explicit DenseOperator(Eigen::MatrixXd m) : m_(std::move(m)) {}
    std::int64_t dim() const override { return m_.rows(); }
    void apply(std::span<const double> x, std::span<double> y) const override;
    const Eigen::MatrixXd& matrix() const { return m_; }

private:
    Eigen::MatrixXd m_;
};

/// Adapter over a GramOperator (normalized matvec).
class GramLinearOperator final : public LinearOperator {
public:
    explicit GramLinearOperator(const GramOperator& g) : g_(&g) {}
    std::int64_t dim() const override { return g_->dim(); }
    void apply(std::span<const double> x, std::span<double> y) const override {
        g_->apply(x, y);
    }

private:
    const GramOperator* g_;
};

struct RankEstimatorConfig {
    double epsilon = 0.05;  // additive accuracy target
    double eta = 0.1;       // failure probability
    double threshold = 0.0; // spectral cut theta; 0 selects the default
    int degree = 0;         // Chebyshev filter degree; 0 selects the default
    std::int64_t probes = 0; // probe count; 0 selects plan_probes(epsilon, eta)
    std::uint64_t seed = 0;
    double transition = 0.5; // rho: filter is 1 on [0, theta*rho), 0 on [theta, 1]

    void validate() const;
};

/// Hoeffding-style probe count: ceil(ln(2/eta) / (2 epsilon^2)).
std::int64_t plan_probes(double epsilon, double eta);

/// Probe count for multiplicative accuracy delta on beta_r, given a positive
/// prior lower bound: plan_probes(delta * beta_prior / |S_r|, eta).
std::int64_t plan_probes_multiplicative(double delta, double eta, std::int64_t s_r_size,
                                        double beta_prior);

/// Default spectral cut for the normalized Gram of S_r.
double default_threshold(int r, std::int64_t s_r_size);

/// Default filter degree ceil((4/sqrt(theta)) * ln(8/epsilon)).
int default_degree(double theta, double epsilon);

/// Degree-m Chebyshev approximation (Jackson damped) of the step function
/// that is 1 on [0, theta*rho) and 0 on [theta, 1], calibrated so the value
/// at 0 is exactly 1.
class StepFilter {
public:
    StepFilter(double theta, double rho, int degree);

    double theta() const { return theta_; }
    int degree() const { return degree_; }
    const std::vector<double>& coefficients() const { return coeff_; }

    /// Scalar evaluation of the filter at an eigenvalue in [0, 1].
    double evaluate(double lambda) const;

    /// z^T h(A) z via the Chebyshev recurrence on matrix-vector products.
    double quadratic_form(const LinearOperator& op, std::span<const double> z) const;

    /// Heuristic resolvability check: the damped transition cannot be
    /// resolved when degree < pi / (sqrt(theta) (1 - sqrt(rho))).
    bool degree_resolves_threshold() const;

private:
    double theta_;
    double rho_;
    int degree_;
    std::vector<double> coeff_; // damped, calibrated Chebyshev coefficients
};

/// Counter-based Rademacher probe source: probe i is a pure function of
/// (seed, i), so any partitioning across workers reproduces the same probes.
class ProbeGenerator {
public:
    explicit ProbeGenerator(std::uint64_t seed) : seed_(seed) {}
    void fill_rademacher(std::int64_t probe_index, std::span<double> z) const;

private:
    std::uint64_t seed_;
};

struct KernelFractionEstimate {
    double value = 0.0;   // estimated dim ker / dim, clamped to [0, 1]
    double stderr_ = 0.0; // empirical standard error across probes
    std::int64_t probes_used = 0;
    double theta_used = 0.0;
    int degree_used = 0;
    std::uint64_t seed = 0;
    bool degree_warning = false;
};

/// Hutchinson estimate of trace(h(A))/dim with the step filter h. The
/// operator must be normalized (spectral norm <= 1) and theta must lie below
/// its smallest nonzero eigenvalue for the estimate to converge to the
/// kernel fraction.
KernelFractionEstimate estimate_kernel_fraction(const LinearOperator& op,
                                                const RankEstimatorConfig& cfg,
                                                double theta);

/// Overload deriving the default theta from the Gram normalization.
KernelFractionEstimate estimate_kernel_fraction(const GramOperator& gram,
                                                const RankEstimatorConfig& cfg);

enum class KernelBackend {
    Stochastic, // Chebyshev-filtered Hutchinson estimate
    Eigen,      // dense eigendecomposition with the float-rank cutoff
    Rational,   // exact integer elimination
};

const char* kernel_backend_name(KernelBackend b);

struct BettiEstimate {
    int r = 0;
    double normalized = 0.0; // beta_r / |S_r| estimate
    double absolute = 0.0;   // normalized * |S_r|
    double stderr_ = 0.0;
    KernelFractionEstimate kernel_r;  // dim ker d_r / |S_r|
    KernelFractionEstimate kernel_r1; // dim ker d_{r+1} / |S_{r+1}|
    double ratio = 0.0;               // |S_{r+1}| / |S_r|
    std::int64_t s_r = 0;
    std::int64_t s_r1 = 0;
};

/// Runs the full pipeline: simplex sets, boundary Grams, kernel fractions,
/// and the combination normalized = k_r + ratio * k_{r+1} - ratio.
BettiEstimate estimate_betti(const Graph& g, int r, const RankEstimatorConfig& cfg,
                             KernelBackend backend = KernelBackend::Stochastic,
                             CliqueStrategy strategy = CliqueStrategy::Auto);

struct GapDiagnostic {
    double smallest_nonzero = 0.0; // smallest nonzero eigenvalue (normalized)
    double theta = 0.0;
    bool resolved = false; // theta sits below the smallest nonzero eigenvalue
};

/// Exact spectral-gap report for a normalized Gram (dense diagonalization;
/// intended for desk-scale inputs).
GapDiagnostic spectral_gap_diagnostic(const GramOperator& gram, double theta);

} // namespace cliquebetti

#endif
