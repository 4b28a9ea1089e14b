#ifndef CLIQUEBETTI_GRAPH_HPP
#define CLIQUEBETTI_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquebetti/errors.hpp"

namespace cliquebetti {

using VertexId = std::int32_t;

/// Simple undirected graph over dense vertex ids 0..n-1.
///
/// Immutable after construction; adjacency lists are kept sorted ascending so
/// that clique enumeration and neighborhood intersections are deterministic.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Self-loops are rejected, duplicates
    /// (in either orientation) are collapsed.
    static Graph from_edges(std::int64_t n,
                            const std::vector<std::pair<VertexId, VertexId>>& edges);

    std::int64_t vertex_count() const { return static_cast<std::int64_t>(adjacency_.size()); }
    std::int64_t edge_count() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const;
    std::int64_t degree(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    std::int64_t max_degree() const;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::int64_t edge_count_ = 0;
};

struct DegeneracyOrdering {
    std::int64_t degeneracy = 0;
    std::vector<VertexId> order;    // removal order of the min-degree peel
    std::vector<std::int64_t> rank; // rank[v] = position of v in `order`
};

struct ArboricityBounds {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

struct GraphStats {
    std::int64_t max_degree = 0;
    std::int64_t degeneracy = 0;
    std::vector<VertexId> degeneracy_order;
    std::int64_t arboricity_lower = 0;
    std::int64_t arboricity_upper = 0;
};

/// Parses a line-oriented edge list: lines "<u> <v>", '#' comments,
/// optional "# n=<count>" header line for isolated trailing vertices.
/// LF and CRLF are both accepted.
Graph parse_edge_list(std::string_view text);

/// Exact degeneracy via repeated minimum-degree removal (bucket queue with
/// deterministic tie-breaking). Every vertex has at most `degeneracy`
/// neighbors later than itself in `order`.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// Density bracket on the arboricity: lower = ceil(|E|/(|V|-1)) and
/// upper = min(max_degree, lower), clamped so lower <= upper. The exact
/// value is not computed. Requires |V| >= 2.
ArboricityBounds arboricity_bounds(const Graph& g);

GraphStats compute_graph_stats(const Graph& g);

} // namespace cliquebetti

#endif
