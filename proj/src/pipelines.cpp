#include "cliquebetti/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cliquebetti {

void DistanceGraphSpec::validate() const {
    if (distances.rows() != distances.cols())
        raise(ErrorCode::Structure, "distance matrix must be square");
    for (Eigen::Index i = 0; i < distances.rows(); ++i) {
        if (std::abs(distances(i, i)) > 1e-12)
            raise(ErrorCode::Precondition, "distance matrix diagonal must be zero");
        for (Eigen::Index j = 0; j < distances.cols(); ++j) {
            if (distances(i, j) < 0.0)
                raise(ErrorCode::Precondition, "distances must be nonnegative");
            if (std::abs(distances(i, j) - distances(j, i)) > 1e-12)
                raise(ErrorCode::Precondition, "distance matrix must be symmetric");
        }
    }
    for (std::size_t i = 1; i < thresholds.size(); ++i)
        if (thresholds[i] < thresholds[i - 1])
            raise(ErrorCode::InvalidArgument, "thresholds must be ascending");
}

Graph threshold_graph(const Eigen::MatrixXd& distances, double epsilon) {
    if (distances.rows() != distances.cols())
        raise(ErrorCode::Structure, "distance matrix must be square");
    const std::int64_t n = distances.rows();
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j)
            if (distances(i, j) <= epsilon)
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return Graph::from_edges(n, edges);
}

void ImageGrid::validate() const {
    if (side < 1) raise(ErrorCode::InvalidArgument, "image side must be positive");
    if (static_cast<std::int64_t>(intensities.size()) !=
        static_cast<std::int64_t>(side) * side)
        raise(ErrorCode::Structure, "intensity buffer does not match side*side");
    for (double v : intensities)
        if (!(v >= 0.0 && v <= 1.0))
            raise(ErrorCode::Precondition, "intensities must lie in [0, 1]");
}

ImageGraph image_threshold_graph(const ImageGrid& img, double epsilon,
                                 bool eight_connectivity) {
    img.validate();
    const int side = img.side;
    std::vector<std::int64_t> vertex_of(static_cast<std::size_t>(side) * side, -1);
    ImageGraph out;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            if (img.at(i, j) <= epsilon) {
                vertex_of[static_cast<std::size_t>(i * side + j)] =
                    static_cast<std::int64_t>(out.labels.size());
                out.labels.push_back(i * side + j);
            }

    std::vector<std::pair<VertexId, VertexId>> edges;
    auto link = [&](int i, int j, int i2, int j2) {
        if (i2 < 0 || j2 < 0 || i2 >= side || j2 >= side) return;
        const std::int64_t a = vertex_of[static_cast<std::size_t>(i * side + j)];
        const std::int64_t b = vertex_of[static_cast<std::size_t>(i2 * side + j2)];
        if (a < 0 || b < 0) return;
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    };
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            if (vertex_of[static_cast<std::size_t>(i * side + j)] < 0) continue;
            link(i, j, i, j + 1);
            link(i, j, i + 1, j);
            if (eight_connectivity) {
                link(i, j, i + 1, j + 1);
                link(i, j, i + 1, j - 1);
            }
        }
    out.graph = Graph::from_edges(static_cast<std::int64_t>(out.labels.size()), edges);
    return out;
}

void PointCloud::validate() const {
    if (dim < 1) raise(ErrorCode::InvalidArgument, "point dimension must be positive");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim)
            raise(ErrorCode::Structure, "point with wrong dimension");
        for (double c : p)
            if (!std::isfinite(c))
                raise(ErrorCode::Precondition, "point coordinates must be finite");
    }
}

Graph rips_graph(const PointCloud& pc, double radius) {
    pc.validate();
    if (radius < 0.0) raise(ErrorCode::InvalidArgument, "radius must be nonnegative");
    const std::int64_t n = pc.size();
    const double r2 = radius * radius;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            double d2 = 0.0;
            for (int c = 0; c < pc.dim; ++c) {
                const double diff = pc.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
                                    pc.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
                d2 += diff * diff;
            }
            if (d2 <= r2)
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    return Graph::from_edges(n, edges);
}

FiltrationSource FiltrationSource::from_distances(Eigen::MatrixXd distances) {
    FiltrationSource s;
    s.kind_ = Kind::Distances;
    s.distances_ = std::move(distances);
    DistanceGraphSpec spec{s.distances_, {}};
    spec.validate();
    return s;
}

FiltrationSource FiltrationSource::from_image(ImageGrid img, bool eight_connectivity) {
    img.validate();
    FiltrationSource s;
    s.kind_ = Kind::Image;
    s.image_ = std::move(img);
    s.eight_connectivity_ = eight_connectivity;
    return s;
}

FiltrationSource FiltrationSource::from_points(PointCloud pc) {
    pc.validate();
    FiltrationSource s;
    s.kind_ = Kind::Points;
    s.points_ = std::move(pc);
    return s;
}

FiltrationSource::Instance FiltrationSource::at(double threshold) const {
    Instance inst;
    switch (kind_) {
        case Kind::Distances: {
            inst.graph = threshold_graph(distances_, threshold);
            inst.labels.resize(static_cast<std::size_t>(inst.graph.vertex_count()));
            for (std::size_t i = 0; i < inst.labels.size(); ++i)
                inst.labels[i] = static_cast<std::int64_t>(i);
            return inst;
        }
        case Kind::Image: {
            auto built = image_threshold_graph(image_, threshold, eight_connectivity_);
            inst.graph = std::move(built.graph);
            inst.labels = std::move(built.labels);
            return inst;
        }
        case Kind::Points: {
            inst.graph = rips_graph(points_, threshold);
            inst.labels.resize(static_cast<std::size_t>(inst.graph.vertex_count()));
            for (std::size_t i = 0; i < inst.labels.size(); ++i)
                inst.labels[i] = static_cast<std::int64_t>(i);
            return inst;
        }
    }
    raise(ErrorCode::Internal, "unknown filtration source");
}

const char* FiltrationSource::kind() const {
    switch (kind_) {
        case Kind::Distances: return "distances";
        case Kind::Image: return "image";
        case Kind::Points: return "points";
    }
    return "unknown";
}

namespace {

std::set<std::pair<std::int64_t, std::int64_t>> labeled_edges(
    const FiltrationSource::Instance& inst) {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& [u, v] : inst.graph.edges()) {
        const std::int64_t a = inst.labels[static_cast<std::size_t>(u)];
        const std::int64_t b = inst.labels[static_cast<std::size_t>(v)];
        out.emplace(std::min(a, b), std::max(a, b));
    }
    return out;
}

} // namespace

BettiCurve filtration_sweep(const FiltrationSource& source, std::span<const double> thresholds,
                            int r, const RankEstimatorConfig& cfg, KernelBackend backend,
                            CliqueStrategy strategy) {
    if (thresholds.empty())
        raise(ErrorCode::InvalidArgument, "at least one threshold is required");
    for (std::size_t i = 1; i < thresholds.size(); ++i)
        if (thresholds[i] < thresholds[i - 1])
            raise(ErrorCode::InvalidArgument, "thresholds must be ascending");
    if (r < 0) raise(ErrorCode::InvalidArgument, "dimension r must be nonnegative");

    BettiCurve curve;
    curve.r = r;
    std::set<std::pair<std::int64_t, std::int64_t>> previous_edges;
    std::int64_t previous_s_r = 0;
    bool first = true;
    for (double threshold : thresholds) {
        const auto inst = source.at(threshold);
        const auto edges = labeled_edges(inst);
        if (!first) {
            if (!std::includes(edges.begin(), edges.end(), previous_edges.begin(),
                               previous_edges.end()))
                raise(ErrorCode::Internal,
                      "filtration is not nested: an edge disappeared between thresholds");
        }

        BettiCurveSample sample;
        sample.threshold = threshold;
        const auto sets = build_simplex_sets(inst.graph, r + 1, strategy);
        sample.s_r = sets[static_cast<std::size_t>(r)].size();
        sample.s_r1 = sets[static_cast<std::size_t>(r) + 1].size();
        if (sample.s_r > 0) {
            const auto est = estimate_betti(inst.graph, r, cfg, backend, strategy);
            sample.normalized = est.normalized;
            sample.absolute = est.absolute;
            sample.stderr_ = est.stderr_;
        }
        if (sample.s_r < previous_s_r)
            raise(ErrorCode::Internal, "filtration is not nested: |S_r| decreased");
        previous_s_r = sample.s_r;
        curve.samples.push_back(sample);
        previous_edges = std::move(edges);
        first = false;
    }
    return curve;
}

namespace {

// C(n, k) as a double; exact integer arithmetic when it fits, otherwise via
// lgamma.
double binomial_double(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    if (n <= 60) {
        double result = 1.0;
        for (std::int64_t i = 1; i <= k; ++i)
            result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
        return result;
    }
    return std::exp(std::lgamma(static_cast<double>(n) + 1.0) -
                    std::lgamma(static_cast<double>(k) + 1.0) -
                    std::lgamma(static_cast<double>(n - k) + 1.0));
}

double safe_log(double x) { return std::log(std::max(x, 2.0)); }

} // namespace

CostReport cost_model(const CostModelInput& in) {
    if (in.n < 1 || in.s_r < 1 || in.edges < 0)
        raise(ErrorCode::InvalidArgument, "cost model requires n >= 1 and |S_r| >= 1");
    if (in.r < 1)
        raise(ErrorCode::InvalidArgument, "cost model requires r >= 1");
    if (!(in.epsilon > 0.0) || !(in.eta > 0.0 && in.eta < 1.0))
        raise(ErrorCode::InvalidArgument, "cost model requires epsilon > 0 and eta in (0,1)");
    if (in.alpha < 1.0)
        raise(ErrorCode::InvalidArgument, "arboricity must be at least 1");

    CostReport rep;
    const double nd = static_cast<double>(in.n);
    const double choose = binomial_double(in.n, static_cast<std::int64_t>(in.r) + 1);
    rep.lgz = (nd * nd * std::sqrt(choose / static_cast<double>(in.s_r)) + nd) / in.epsilon;

    rep.hybrid_classical_arboricity =
        static_cast<double>(in.edges) * std::pow(in.alpha, static_cast<double>(in.r - 1));
    if (in.degeneracy >= 0.0)
        rep.hybrid_classical_degeneracy =
            in.degeneracy * nd * std::pow(3.0, in.degeneracy / 3.0);

    rep.hybrid_quantum = safe_log(static_cast<double>(in.r) * nd) *
                         safe_log(static_cast<double>(in.r) * static_cast<double>(in.s_r) *
                                  static_cast<double>(in.s_r1)) *
                         std::log(1.0 / in.eta) / (in.epsilon * in.epsilon);

    double classical = rep.hybrid_classical_arboricity;
    if (rep.hybrid_classical_degeneracy >= 0.0)
        classical = std::min(classical, rep.hybrid_classical_degeneracy);
    rep.hybrid_total = classical + rep.hybrid_quantum;
    rep.ratio = rep.hybrid_total > 0.0 ? rep.lgz / rep.hybrid_total : 0.0;
    return rep;
}

} // namespace cliquebetti
