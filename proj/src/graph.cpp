#include "cliquebetti/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace cliquebetti {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse: return "parse";
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::Limit: return "limit";
        case ErrorCode::Structure: return "structure";
        case ErrorCode::Io: return "io";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

Graph Graph::from_edges(std::int64_t n,
                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (n < 0)
        raise(ErrorCode::InvalidArgument, "vertex count must be nonnegative");
    Graph g;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            raise(ErrorCode::InvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for n=" + std::to_string(n));
        if (u == v)
            raise(ErrorCode::InvalidArgument,
                  "self-loop at vertex " + std::to_string(u) + " is not allowed");
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::int64_t half_degree_sum = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        half_degree_sum += static_cast<std::int64_t>(adj.size());
    }
    g.edge_count_ = half_degree_sum / 2;
    return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    const auto& adj = adjacency_[static_cast<std::size_t>(v)];
    return {adj.data(), adj.size()};
}

std::int64_t Graph::degree(VertexId v) const {
    return static_cast<std::int64_t>(adjacency_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& adj = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::int64_t Graph::max_degree() const {
    std::int64_t d = 0;
    for (const auto& adj : adjacency_)
        d = std::max(d, static_cast<std::int64_t>(adj.size()));
    return d;
}

namespace {

bool parse_int(std::string_view token, std::int64_t& value) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::int64_t declared_n = -1;
    std::int64_t max_id = -1;

    std::size_t pos = 0;
    std::int64_t line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        // Header "# n=<count>" may declare isolated trailing vertices.
        if (!line.empty() && line.front() == '#') {
            std::string_view rest = line.substr(1);
            while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
                rest.remove_prefix(1);
            if (rest.substr(0, 2) == "n=") {
                std::int64_t n = 0;
                if (!parse_int(rest.substr(2), n) || n < 0)
                    raise(ErrorCode::Parse,
                          "line " + std::to_string(line_no) + ": malformed n= header");
                declared_n = n;
            }
            continue;
        }

        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            raise(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                        ": expected two vertex ids, got " +
                                        std::to_string(tokens.size()) + " tokens");
        std::int64_t u = 0, v = 0;
        if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v) || u < 0 || v < 0)
            raise(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                        ": vertex ids must be nonnegative integers");
        if (u == v)
            raise(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                        ": self-loop at vertex " + std::to_string(u));
        if (u > std::numeric_limits<VertexId>::max() || v > std::numeric_limits<VertexId>::max())
            raise(ErrorCode::Limit, "line " + std::to_string(line_no) + ": vertex id too large");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        max_id = std::max({max_id, u, v});
    }

    std::int64_t n = max_id + 1;
    if (declared_n >= 0) {
        if (declared_n < n)
            raise(ErrorCode::Parse, "header n=" + std::to_string(declared_n) +
                                        " smaller than max vertex id " + std::to_string(max_id));
        n = declared_n;
    }
    return Graph::from_edges(n, edges);
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    DegeneracyOrdering result;
    result.order.reserve(static_cast<std::size_t>(n));
    result.rank.assign(static_cast<std::size_t>(n), -1);
    if (n == 0) return result;

    // Bucket queue keyed by current degree. Stale bucket entries are skipped
    // on pop; decrease-key pushes the vertex into its new bucket and lowers
    // the cursor, so ties resolve toward smaller vertex ids deterministically.
    std::vector<std::size_t> deg(static_cast<std::size_t>(n));
    std::size_t max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = static_cast<std::size_t>(g.degree(v));
        max_deg = std::max(max_deg, deg[static_cast<std::size_t>(v)]);
    }
    std::vector<std::vector<VertexId>> buckets(max_deg + 1);
    for (VertexId v = 0; v < n; ++v)
        buckets[deg[static_cast<std::size_t>(v)]].push_back(v);
    std::vector<std::size_t> heads(buckets.size(), 0);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);

    std::size_t d = 0;
    std::size_t cursor = 0; // smallest bucket that may hold a live entry
    for (std::int64_t step = 0; step < n; ++step) {
        VertexId v = -1;
        while (v < 0) {
            if (heads[cursor] >= buckets[cursor].size()) {
                ++cursor;
                continue;
            }
            VertexId cand = buckets[cursor][heads[cursor]++];
            if (removed[static_cast<std::size_t>(cand)] ||
                deg[static_cast<std::size_t>(cand)] != cursor)
                continue; // stale entry
            v = cand;
        }
        d = std::max(d, cursor);
        removed[static_cast<std::size_t>(v)] = 1;
        result.rank[static_cast<std::size_t>(v)] = step;
        result.order.push_back(v);
        for (VertexId w : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)]) continue;
            std::size_t& dw = deg[static_cast<std::size_t>(w)];
            --dw;
            buckets[dw].push_back(w);
            if (dw < cursor) cursor = dw;
        }
    }
    result.degeneracy = static_cast<std::int64_t>(d);
    return result;
}

ArboricityBounds arboricity_bounds(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    if (n < 2)
        raise(ErrorCode::InvalidArgument,
              "arboricity bounds are undefined for graphs with fewer than 2 vertices");
    const std::int64_t e = g.edge_count();
    const std::int64_t lower = (e + n - 2) / (n - 1); // ceil(e / (n-1))
    const std::int64_t upper = std::max(lower, std::min(g.max_degree(), lower));
    return {lower, upper};
}

GraphStats compute_graph_stats(const Graph& g) {
    GraphStats stats;
    stats.max_degree = g.max_degree();
    auto degen = degeneracy_ordering(g);
    stats.degeneracy = degen.degeneracy;
    stats.degeneracy_order = std::move(degen.order);
    if (g.vertex_count() >= 2) {
        auto bounds = arboricity_bounds(g);
        stats.arboricity_lower = bounds.lower;
        stats.arboricity_upper = bounds.upper;
    }
    return stats;
}

} // namespace cliquebetti
