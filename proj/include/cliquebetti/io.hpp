#ifndef CLIQUEBETTI_IO_HPP
#define CLIQUEBETTI_IO_HPP

#include <string>
#include <string_view>

#include "cliquebetti/chain_complex.hpp"
#include "cliquebetti/pipelines.hpp"
#include "cliquebetti/quantum_state.hpp"

namespace cliquebetti {

/// Shortest round-trip decimal rendering of a double (deterministic).
std::string format_double(double value);

std::string read_text_file(const std::string& path);

Graph load_graph(const std::string& path);
std::string format_edge_list(const Graph& g);

std::string cliques_to_csv(const CliqueList& list);
std::string cliques_to_json(const CliqueList& list);

/// Coordinate-triplet text: header "r n |S_r|", then "row col sign" lines in
/// column-major order.
std::string boundary_to_triplets(const BoundaryMatrix& m);
BoundaryMatrix boundary_from_triplets(std::string_view text);

/// CSV of floats (side x side) or 8-bit grayscale PGM (P2/P5), normalized
/// by 255. The format is chosen by content (PGM magic), not extension.
ImageGrid load_image(const std::string& path);
ImageGrid parse_image_csv(std::string_view text);
ImageGrid parse_pgm(std::string_view bytes);

PointCloud load_points(const std::string& path);
PointCloud parse_points_csv(std::string_view text);

/// Accepts either a path to a JSON file with fields
/// {num_subsystems, local_dims, real, imag} or one of the named constructors
/// bell, ghz(N), product(N), random_pure(N, seed).
DensityMatrix load_state(const std::string& spec);
DensityMatrix parse_state_json(std::string_view text);

std::string curve_to_csv(const BettiCurve& curve);
std::string curve_to_json(const BettiCurve& curve);

} // namespace cliquebetti

#endif
