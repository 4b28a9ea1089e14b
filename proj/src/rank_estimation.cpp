#include "cliquebetti/rank_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cliquebetti {

void DenseOperator::apply(std::span<const double> x, std::span<double> y) const {
    if (static_cast<std::int64_t>(x.size()) != m_.cols() ||
        static_cast<std::int64_t>(y.size()) != m_.rows())
        raise(ErrorCode::Structure, "dense operator apply: dimension mismatch");
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), m_.cols());
    Eigen::Map<Eigen::VectorXd> yv(y.data(), m_.rows());
    yv = m_ * xv;
}

void RankEstimatorConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        raise(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1)");
    if (!(eta > 0.0 && eta < 1.0))
        raise(ErrorCode::InvalidArgument, "eta must lie in (0, 1)");
    if (threshold != 0.0 && !(threshold > 0.0 && threshold < 1.0))
        raise(ErrorCode::InvalidArgument, "threshold must lie in (0, 1)");
    if (degree < 0)
        raise(ErrorCode::InvalidArgument, "degree must be nonnegative");
    if (probes < 0)
        raise(ErrorCode::InvalidArgument, "probe count must be nonnegative");
    if (!(transition > 0.0 && transition < 1.0))
        raise(ErrorCode::InvalidArgument, "transition fraction must lie in (0, 1)");
}

std::int64_t plan_probes(double epsilon, double eta) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        raise(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1)");
    if (!(eta > 0.0 && eta < 1.0))
        raise(ErrorCode::InvalidArgument, "eta must lie in (0, 1)");
    return static_cast<std::int64_t>(
        std::ceil(std::log(2.0 / eta) / (2.0 * epsilon * epsilon)));
}

std::int64_t plan_probes_multiplicative(double delta, double eta, std::int64_t s_r_size,
                                        double beta_prior) {
    if (beta_prior <= 0.0)
        raise(ErrorCode::InvalidArgument,
              "multiplicative planning requires a positive Betti prior");
    if (s_r_size <= 0)
        raise(ErrorCode::InvalidArgument, "|S_r| must be positive");
    return plan_probes(delta * beta_prior / static_cast<double>(s_r_size), eta);
}

double default_threshold(int r, std::int64_t s_r_size) {
    if (s_r_size <= 0) return 0.5;
    return 1.0 / (2.0 * static_cast<double>(r + 1) * static_cast<double>(s_r_size));
}

int default_degree(double theta, double epsilon) {
    return static_cast<int>(
        std::ceil(4.0 / std::sqrt(theta) * std::log(8.0 / epsilon)));
}

StepFilter::StepFilter(double theta, double rho, int degree)
    : theta_(theta), rho_(rho), degree_(degree) {
    if (!(theta > 0.0 && theta < 1.0))
        raise(ErrorCode::InvalidArgument, "filter threshold must lie in (0, 1)");
    if (!(rho > 0.0 && rho < 1.0))
        raise(ErrorCode::InvalidArgument, "transition fraction must lie in (0, 1)");
    if (degree < 1)
        raise(ErrorCode::InvalidArgument, "filter degree must be at least 1");

    const double lo = theta * rho; // filter equals 1 below this point
    auto target = [&](double lambda) {
        if (lambda <= lo) return 1.0;
        if (lambda >= theta) return 0.0;
        // cosine ramp between the plateaus
        return 0.5 * (1.0 + std::cos(std::numbers::pi * (lambda - lo) / (theta - lo)));
    };

    // Chebyshev coefficients on x in [-1, 1] with lambda = (x + 1) / 2,
    // via Chebyshev-Gauss quadrature.
    const int m = degree;
    const int quad = std::max(4 * (m + 1), 256);
    coeff_.assign(static_cast<std::size_t>(m) + 1, 0.0);
    for (int j = 0; j < quad; ++j) {
        const double phi = std::numbers::pi * (static_cast<double>(j) + 0.5) /
                           static_cast<double>(quad);
        const double f = target((1.0 + std::cos(phi)) / 2.0);
        for (int k = 0; k <= m; ++k)
            coeff_[static_cast<std::size_t>(k)] += f * std::cos(k * phi);
    }
    for (int k = 0; k <= m; ++k)
        coeff_[static_cast<std::size_t>(k)] *=
            (k == 0 ? 1.0 : 2.0) / static_cast<double>(quad);

    // Jackson damping removes the Gibbs oscillations of the raw expansion.
    const double denom = static_cast<double>(m) + 2.0;
    const double alpha = std::numbers::pi / denom;
    for (int k = 0; k <= m; ++k) {
        const double jackson =
            ((denom - static_cast<double>(k)) * std::cos(k * alpha) +
             std::sin(k * alpha) / std::tan(alpha)) /
            denom;
        coeff_[static_cast<std::size_t>(k)] *= jackson;
    }

    // Calibrate so the filter is exactly 1 at lambda = 0 (x = -1).
    double at_zero = 0.0;
    for (int k = 0; k <= m; ++k)
        at_zero += coeff_[static_cast<std::size_t>(k)] * (k % 2 == 0 ? 1.0 : -1.0);
    if (std::abs(at_zero) < 0.5)
        raise(ErrorCode::Internal, "step filter degenerate at lambda = 0");
    for (auto& c : coeff_) c /= at_zero;
}

double StepFilter::evaluate(double lambda) const {
    const double x = 2.0 * lambda - 1.0;
    double tkm1 = 1.0, tk = x, sum = coeff_[0];
    if (degree_ >= 1) sum += coeff_[1] * x;
    for (int k = 2; k <= degree_; ++k) {
        const double tk1 = 2.0 * x * tk - tkm1;
        tkm1 = tk;
        tk = tk1;
        sum += coeff_[static_cast<std::size_t>(k)] * tk;
    }
    return sum;
}

double StepFilter::quadratic_form(const LinearOperator& op, std::span<const double> z) const {
    const std::int64_t d = op.dim();
    if (static_cast<std::int64_t>(z.size()) != d)
        raise(ErrorCode::Structure, "probe vector does not match operator dimension");

    // Recurrence on w_k = T_k(2A - I) z; the quadratic form accumulates
    // sum_k c_k z^T w_k.
    std::vector<double> wprev(z.begin(), z.end()); // w_0 = z
    std::vector<double> wcur(static_cast<std::size_t>(d));
    std::vector<double> tmp(static_cast<std::size_t>(d));

    double acc = 0.0;
    for (std::int64_t i = 0; i < d; ++i)
        acc += z[static_cast<std::size_t>(i)] * wprev[static_cast<std::size_t>(i)];
    double total = coeff_[0] * acc;
    if (degree_ < 1) return total;

    // w_1 = (2A - I) z
    op.apply(z, wcur);
    for (std::int64_t i = 0; i < d; ++i)
        wcur[static_cast<std::size_t>(i)] =
            2.0 * wcur[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(i)];
    acc = 0.0;
    for (std::int64_t i = 0; i < d; ++i)
        acc += z[static_cast<std::size_t>(i)] * wcur[static_cast<std::size_t>(i)];
    total += coeff_[1] * acc;

    for (int k = 2; k <= degree_; ++k) {
        // w_{k} = 2 (2A - I) w_{k-1} - w_{k-2}
        op.apply(wcur, tmp);
        for (std::int64_t i = 0; i < d; ++i) {
            const double next = 4.0 * tmp[static_cast<std::size_t>(i)] -
                                2.0 * wcur[static_cast<std::size_t>(i)] -
                                wprev[static_cast<std::size_t>(i)];
            wprev[static_cast<std::size_t>(i)] = wcur[static_cast<std::size_t>(i)];
            wcur[static_cast<std::size_t>(i)] = next;
        }
        acc = 0.0;
        for (std::int64_t i = 0; i < d; ++i)
            acc += z[static_cast<std::size_t>(i)] * wcur[static_cast<std::size_t>(i)];
        total += coeff_[static_cast<std::size_t>(k)] * acc;
    }
    return total;
}

bool StepFilter::degree_resolves_threshold() const {
    const double required =
        std::numbers::pi / (std::sqrt(theta_) * (1.0 - std::sqrt(rho_)));
    return static_cast<double>(degree_) >= required;
}

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

void ProbeGenerator::fill_rademacher(std::int64_t probe_index, std::span<double> z) const {
    // One SplitMix64 stream per (seed, probe); each state yields 64 signs.
    std::uint64_t state =
        splitmix64(seed_ ^ (0x517cc1b727220a95ull * static_cast<std::uint64_t>(probe_index + 1)));
    std::uint64_t bits = 0;
    int available = 0;
    for (auto& v : z) {
        if (available == 0) {
            state = splitmix64(state);
            bits = state;
            available = 64;
        }
        v = (bits & 1ull) ? 1.0 : -1.0;
        bits >>= 1;
        --available;
    }
}

namespace {

// Cheap power-iteration bound used to reject unnormalized operators.
double rough_spectral_norm(const LinearOperator& op) {
    const std::int64_t d = op.dim();
    std::vector<double> x(static_cast<std::size_t>(d));
    std::vector<double> y(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i)
        x[static_cast<std::size_t>(i)] = 1.0 + 0.41 * static_cast<double>(i % 5);
    double norm = 0.0;
    for (int it = 0; it < 24; ++it) {
        op.apply(x, y);
        norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = y[i] / norm;
    }
    return norm;
}

} // namespace

KernelFractionEstimate estimate_kernel_fraction(const LinearOperator& op,
                                                const RankEstimatorConfig& cfg,
                                                double theta) {
    cfg.validate();
    const std::int64_t d = op.dim();
    if (d == 0)
        raise(ErrorCode::InvalidArgument, "cannot estimate the kernel of an empty operator");
    if (!(theta > 0.0 && theta < 1.0))
        raise(ErrorCode::InvalidArgument, "threshold must lie in (0, 1)");
    const double norm_bound = rough_spectral_norm(op);
    if (norm_bound > 1.0 + 1e-9)
        raise(ErrorCode::Precondition, "operator is not normalized: spectral norm about " +
                                           std::to_string(norm_bound));

    const int degree = cfg.degree > 0 ? cfg.degree : default_degree(theta, cfg.epsilon);
    const std::int64_t probes =
        cfg.probes > 0 ? cfg.probes : plan_probes(cfg.epsilon, cfg.eta);
    const StepFilter filter(theta, cfg.transition, degree);
    const ProbeGenerator gen(cfg.seed);

    double sum = 0.0;
    double sum_sq = 0.0;
    std::vector<double> z(static_cast<std::size_t>(d));
    for (std::int64_t p = 0; p < probes; ++p) {
        gen.fill_rademacher(p, z);
        const double q = filter.quadratic_form(op, z) / static_cast<double>(d);
        sum += q;
        sum_sq += q * q;
    }
    const double mean = sum / static_cast<double>(probes);
    double variance = 0.0;
    if (probes > 1) {
        variance = (sum_sq - sum * sum / static_cast<double>(probes)) /
                   static_cast<double>(probes - 1);
        variance = std::max(variance, 0.0);
    }

    KernelFractionEstimate est;
    est.value = std::clamp(mean, 0.0, 1.0);
    est.stderr_ = std::sqrt(variance / static_cast<double>(probes));
    est.probes_used = probes;
    est.theta_used = theta;
    est.degree_used = degree;
    est.seed = cfg.seed;
    est.degree_warning = !filter.degree_resolves_threshold();
    return est;
}

KernelFractionEstimate estimate_kernel_fraction(const GramOperator& gram,
                                                const RankEstimatorConfig& cfg) {
    const double theta = cfg.threshold > 0.0
                             ? cfg.threshold
                             : default_threshold(gram.factor().r(), gram.dim());
    GramLinearOperator op(gram);
    return estimate_kernel_fraction(op, cfg, theta);
}

const char* kernel_backend_name(KernelBackend b) {
    switch (b) {
        case KernelBackend::Stochastic: return "stochastic";
        case KernelBackend::Eigen: return "eigen";
        case KernelBackend::Rational: return "rational";
    }
    return "unknown";
}

namespace {

// Kernel dimension by dense diagonalization of the unnormalized integer
// Gram, using the float-rank cutoff rule.
std::int64_t eigen_kernel_dim(const GramOperator& gram) {
    const IntDense g = gram.dense_integer();
    Eigen::MatrixXd m(g.rows, g.cols);
    for (std::int64_t i = 0; i < g.rows; ++i)
        for (std::int64_t j = 0; j < g.cols; ++j) m(i, j) = static_cast<double>(g.at(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const auto& vals = es.eigenvalues();
    const double largest = vals.size() > 0 ? std::abs(vals(vals.size() - 1)) : 0.0;
    const double cutoff = 1e-10 * static_cast<double>(g.rows) * std::max(largest, 1.0);
    std::int64_t kernel = 0;
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        if (std::abs(vals(i)) <= cutoff) ++kernel;
    return kernel;
}

KernelFractionEstimate exact_fraction(std::int64_t kernel, std::int64_t dim) {
    KernelFractionEstimate est;
    est.value = static_cast<double>(kernel) / static_cast<double>(dim);
    est.stderr_ = 0.0;
    est.probes_used = 0;
    est.theta_used = 0.0;
    est.degree_used = 0;
    return est;
}

} // namespace

BettiEstimate estimate_betti(const Graph& g, int r, const RankEstimatorConfig& cfg,
                             KernelBackend backend, CliqueStrategy strategy) {
    if (r < 0) raise(ErrorCode::InvalidArgument, "dimension r must be nonnegative");
    cfg.validate();

    const auto sets = build_simplex_sets(g, r + 1, strategy);
    const auto& s_r = sets[static_cast<std::size_t>(r)];
    const auto& s_r1 = sets[static_cast<std::size_t>(r) + 1];
    if (s_r.size() == 0)
        raise(ErrorCode::InvalidArgument,
              "no " + std::to_string(r) + "-simplices: the complex has no S_" +
                  std::to_string(r));

    BettiEstimate result;
    result.r = r;
    result.s_r = s_r.size();
    result.s_r1 = s_r1.size();
    result.ratio = static_cast<double>(s_r1.size()) / static_cast<double>(s_r.size());

    auto kernel_fraction = [&](const SimplexSet& s, const BoundaryMatrix& m,
                               std::uint64_t seed_offset) {
        const GramOperator gram(m);
        switch (backend) {
            case KernelBackend::Rational: {
                const std::int64_t kernel = s.r == 0 ? s.size() : exact_kernel_dim(m);
                return exact_fraction(kernel, s.size());
            }
            case KernelBackend::Eigen:
                return exact_fraction(eigen_kernel_dim(gram), s.size());
            case KernelBackend::Stochastic: {
                RankEstimatorConfig local = cfg;
                local.seed = cfg.seed + seed_offset;
                return estimate_kernel_fraction(gram, local);
            }
        }
        raise(ErrorCode::InvalidArgument, "unknown kernel backend");
    };

    result.kernel_r = kernel_fraction(s_r, boundary_matrix(s_r), 0);
    if (s_r1.size() > 0)
        result.kernel_r1 = kernel_fraction(s_r1, boundary_matrix(s_r1), 0x70f1u);

    result.normalized = result.kernel_r.value + result.ratio * result.kernel_r1.value -
                        result.ratio;
    result.absolute = result.normalized * static_cast<double>(s_r.size());
    result.stderr_ = std::sqrt(result.kernel_r.stderr_ * result.kernel_r.stderr_ +
                               result.ratio * result.ratio * result.kernel_r1.stderr_ *
                                   result.kernel_r1.stderr_);
    return result;
}

GapDiagnostic spectral_gap_diagnostic(const GramOperator& gram, double theta) {
    GapDiagnostic diag;
    diag.theta = theta;
    if (gram.dim() == 0) return diag;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram.dense(), Eigen::EigenvaluesOnly);
    const auto& vals = es.eigenvalues();
    const double largest = std::abs(vals(vals.size() - 1));
    const double cutoff = 1e-10 * static_cast<double>(gram.dim()) * std::max(largest, 1e-300);
    diag.smallest_nonzero = 0.0;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) > cutoff) {
            diag.smallest_nonzero = vals(i);
            break;
        }
    }
    diag.resolved = diag.smallest_nonzero > 0.0 ? theta < diag.smallest_nonzero : true;
    return diag;
}

} // namespace cliquebetti
