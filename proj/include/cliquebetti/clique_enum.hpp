#ifndef CLIQUEBETTI_CLIQUE_ENUM_HPP
#define CLIQUEBETTI_CLIQUE_ENUM_HPP

#include <cstdint>
#include <vector>

#include "cliquebetti/graph.hpp"
#include "cliquebetti/simplex_set.hpp"

namespace cliquebetti {

enum class CliqueStrategy {
    Auto,        // degeneracy-style when d <= threshold, else arboricity-style
    Arboricity,  // edge-rooted recursive neighborhood intersection
    Degeneracy,  // vertex-rooted search over later-ordered neighborhoods
    BruteForce,  // subset check, guarded; test oracle
};

const char* clique_strategy_name(CliqueStrategy s);

/// All k-cliques of a graph as ascending vertex tuples in lexicographic
/// order, without duplicates.
struct CliqueList {
    int k = 0;
    CliqueStrategy source = CliqueStrategy::Auto;
    std::vector<std::vector<VertexId>> cliques;

    std::int64_t count() const { return static_cast<std::int64_t>(cliques.size()); }
};

/// Edge-rooted enumeration: edges are oriented by a smallest-degree-last
/// total order and extended by intersecting later-neighborhoods.
CliqueList enumerate_arboricity_style(const Graph& g, int k);

/// Vertex-rooted enumeration over the degeneracy order: each clique is
/// found inside the later-neighborhood (size <= degeneracy) of its earliest
/// vertex, with the recursion cut at depth k.
CliqueList enumerate_degeneracy_style(const Graph& g, int k);

/// Checks all C(n,k) vertex subsets; refuses graphs with more than
/// `kBruteForceVertexLimit` vertices.
CliqueList enumerate_bruteforce(const Graph& g, int k);

inline constexpr std::int64_t kBruteForceVertexLimit = 25;

/// Default degeneracy cutoff for CliqueStrategy::Auto.
inline constexpr std::int64_t kAutoDegeneracyThreshold = 20;

CliqueList enumerate_cliques(const Graph& g, int k, CliqueStrategy strategy,
                             std::int64_t auto_threshold = kAutoDegeneracyThreshold);

/// Simplex sets S_0..S_r_max of the clique complex of g; S_r holds the
/// (r+1)-cliques.
std::vector<SimplexSet> build_simplex_sets(const Graph& g, int r_max,
                                           CliqueStrategy strategy = CliqueStrategy::Auto,
                                           std::int64_t auto_threshold = kAutoDegeneracyThreshold);

} // namespace cliquebetti

#endif
