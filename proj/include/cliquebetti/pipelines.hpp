#ifndef CLIQUEBETTI_PIPELINES_HPP
#define CLIQUEBETTI_PIPELINES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cliquebetti/quantum_state.hpp"
#include "cliquebetti/rank_estimation.hpp"

namespace cliquebetti {

/// Symmetric distance matrix plus an ascending threshold schedule.
struct DistanceGraphSpec {
    Eigen::MatrixXd distances;
    std::vector<double> thresholds;

    void validate() const;
};

/// Graph on the index set with edges where D_ij <= epsilon (inclusive).
Graph threshold_graph(const Eigen::MatrixXd& distances, double epsilon);

/// Square grayscale image with intensities in [0, 1].
struct ImageGrid {
    int side = 0;
    std::vector<double> intensities; // row-major, side * side

    double at(int i, int j) const {
        return intensities[static_cast<std::size_t>(i * side + j)];
    }
    void validate() const;
};

struct ImageGraph {
    Graph graph;
    // Stable mapping: vertex v corresponds to pixel flat index labels[v]
    // (row-major over the full grid).
    std::vector<std::int64_t> labels;
};

/// Active pixels (intensity <= epsilon) become vertices in row-major order;
/// edges follow 4-connectivity, or 8-connectivity when requested.
ImageGraph image_threshold_graph(const ImageGrid& img, double epsilon,
                                 bool eight_connectivity = false);

struct PointCloud {
    int dim = 0;
    std::vector<std::vector<double>> points;

    std::int64_t size() const { return static_cast<std::int64_t>(points.size()); }
    void validate() const;
};

/// Radius graph: edge whenever the Euclidean distance is <= radius.
Graph rips_graph(const PointCloud& pc, double radius);

/// One of the three graph builders, wrapped so a sweep can rebuild the graph
/// at each threshold and verify nestedness in a stable vertex labeling.
class FiltrationSource {
public:
    static FiltrationSource from_distances(Eigen::MatrixXd distances);
    static FiltrationSource from_image(ImageGrid img, bool eight_connectivity = false);
    static FiltrationSource from_points(PointCloud pc);

    struct Instance {
        Graph graph;
        std::vector<std::int64_t> labels; // stable ids for nestedness checks
    };
    Instance at(double threshold) const;

    const char* kind() const;

private:
    enum class Kind { Distances, Image, Points };
    Kind kind_ = Kind::Distances;
    Eigen::MatrixXd distances_;
    ImageGrid image_;
    bool eight_connectivity_ = false;
    PointCloud points_;
};

struct BettiCurveSample {
    double threshold = 0.0;
    std::int64_t s_r = 0;
    std::int64_t s_r1 = 0;
    double normalized = 0.0;
    double absolute = 0.0;
    double stderr_ = 0.0;
};

struct BettiCurve {
    int r = 0;
    std::vector<BettiCurveSample> samples;
};

/// Betti estimates across an ascending threshold schedule. Edge sets must be
/// nested from one threshold to the next (checked in the stable labeling);
/// thresholds with no r-simplices record zeros.
BettiCurve filtration_sweep(const FiltrationSource& source, std::span<const double> thresholds,
                            int r, const RankEstimatorConfig& cfg,
                            KernelBackend backend = KernelBackend::Stochastic,
                            CliqueStrategy strategy = CliqueStrategy::Auto);

/// Inputs for the asymptotic cost formulas. Logarithms are natural and their
/// arguments are clamped to at least 2.
struct CostModelInput {
    std::int64_t n = 0;
    int r = 1;
    std::int64_t s_r = 0;
    std::int64_t s_r1 = 0;
    std::int64_t edges = 0;
    double epsilon = 0.1;
    double eta = 0.1;
    double alpha = 1.0;       // arboricity (or an upper bound)
    double degeneracy = -1.0; // optional; < 0 means not provided
};

struct CostReport {
    double lgz = 0.0;                        // (n^2 sqrt(C(n,r+1)/|S_r|) + n)/eps
    double hybrid_classical_arboricity = 0.0; // |E| alpha^(r-1)
    double hybrid_classical_degeneracy = -1.0; // d n 3^(d/3), when d provided
    double hybrid_quantum = 0.0;             // log(rn) log(r |S_r||S_{r+1}|) log(1/eta)/eps^2
    double hybrid_total = 0.0;               // best classical + quantum
    double ratio = 0.0;                      // lgz / hybrid_total
};

CostReport cost_model(const CostModelInput& in);

} // namespace cliquebetti

#endif
