#include "cliquebetti/clique_enum.hpp"

#include <algorithm>
#include <numeric>

namespace cliquebetti {

const char* clique_strategy_name(CliqueStrategy s) {
    switch (s) {
        case CliqueStrategy::Auto: return "auto";
        case CliqueStrategy::Arboricity: return "arboricity";
        case CliqueStrategy::Degeneracy: return "degeneracy";
        case CliqueStrategy::BruteForce: return "brute_force";
    }
    return "unknown";
}

std::string encode_simplex(std::span<const VertexId> tuple, std::int64_t n) {
    std::string bits(static_cast<std::size_t>(n), '0');
    VertexId prev = -1;
    for (VertexId v : tuple) {
        if (v < 0 || v >= n)
            raise(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
        if (v <= prev)
            raise(ErrorCode::InvalidArgument, "simplex tuple must be strictly ascending");
        bits[static_cast<std::size_t>(v)] = '1';
        prev = v;
    }
    return bits;
}

std::string SimplexSet::encoding(std::int64_t idx) const {
    const auto& t = simplices.at(static_cast<std::size_t>(idx));
    return encode_simplex({t.data(), t.size()}, n);
}

std::vector<std::string> SimplexSet::encodings() const {
    std::vector<std::string> out;
    out.reserve(simplices.size());
    for (std::int64_t i = 0; i < size(); ++i) out.push_back(encoding(i));
    return out;
}

namespace {

void check_k(int k) {
    if (k < 1)
        raise(ErrorCode::InvalidArgument, "clique size k must be at least 1");
}

void finalize(CliqueList& list) {
    std::sort(list.cliques.begin(), list.cliques.end());
    list.cliques.erase(std::unique(list.cliques.begin(), list.cliques.end()),
                       list.cliques.end());
}

CliqueList all_vertices(const Graph& g, CliqueStrategy tag) {
    CliqueList list;
    list.k = 1;
    list.source = tag;
    list.cliques.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) list.cliques.push_back({v});
    return list;
}

// Extends the current clique by vertices from `cands` (ascending in the
// given total order); each new candidate set is the intersection of the old
// one with the later-neighborhood of the chosen vertex.
void extend_clique(const Graph& g, std::vector<VertexId>& clique,
                   std::vector<VertexId>& cands, int remaining,
                   std::vector<std::vector<VertexId>>& out) {
    if (remaining == 0) {
        auto sorted = clique;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        return;
    }
    if (static_cast<int>(cands.size()) < remaining) return;
    std::vector<VertexId> next;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        VertexId v = cands[i];
        clique.push_back(v);
        next.clear();
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            VertexId w = cands[j];
            if (g.has_edge(v, w)) next.push_back(w);
        }
        extend_clique(g, clique, next, remaining - 1, out);
        clique.pop_back();
    }
}

std::vector<VertexId> later_neighbors(const Graph& g, VertexId v,
                                      const std::vector<std::int64_t>& rank) {
    std::vector<VertexId> later;
    for (VertexId w : g.neighbors(v))
        if (rank[static_cast<std::size_t>(w)] > rank[static_cast<std::size_t>(v)])
            later.push_back(w);
    std::sort(later.begin(), later.end(), [&](VertexId a, VertexId b) {
        return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
    });
    return later;
}

} // namespace

CliqueList enumerate_arboricity_style(const Graph& g, int k) {
    check_k(k);
    if (k == 1) return all_vertices(g, CliqueStrategy::Arboricity);

    CliqueList list;
    list.k = k;
    list.source = CliqueStrategy::Arboricity;
    const std::int64_t n = g.vertex_count();
    if (k > n) return list;

    // Smallest-degree-last total order: high-degree vertices first, ties by
    // id. Each clique is emitted exactly once, as an ascending chain in this
    // order rooted at one oriented edge.
    std::vector<VertexId> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](VertexId a, VertexId b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<std::int64_t> rank(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        rank[static_cast<std::size_t>(by_degree[static_cast<std::size_t>(i)])] = i;

    std::vector<VertexId> clique;
    std::vector<VertexId> cands;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (rank[static_cast<std::size_t>(v)] <= rank[static_cast<std::size_t>(u)]) continue;
            if (k == 2) {
                list.cliques.push_back({std::min(u, v), std::max(u, v)});
                continue;
            }
            // Common later-neighborhood of the oriented edge (u, v).
            cands.clear();
            for (VertexId w : g.neighbors(v)) {
                if (rank[static_cast<std::size_t>(w)] <= rank[static_cast<std::size_t>(v)]) continue;
                if (g.has_edge(u, w)) cands.push_back(w);
            }
            std::sort(cands.begin(), cands.end(), [&](VertexId a, VertexId b) {
                return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
            });
            clique.assign({u, v});
            extend_clique(g, clique, cands, k - 2, list.cliques);
        }
    }
    finalize(list);
    return list;
}

CliqueList enumerate_degeneracy_style(const Graph& g, int k) {
    check_k(k);
    if (k == 1) return all_vertices(g, CliqueStrategy::Degeneracy);

    CliqueList list;
    list.k = k;
    list.source = CliqueStrategy::Degeneracy;
    const std::int64_t n = g.vertex_count();
    if (k > n) return list;

    const auto degen = degeneracy_ordering(g);
    std::vector<VertexId> clique;
    for (VertexId root : degen.order) {
        // Every k-clique whose earliest vertex (in degeneracy order) is
        // `root` lies inside its later-neighborhood, which has at most
        // `degeneracy` vertices.
        auto cands = later_neighbors(g, root, degen.rank);
        if (static_cast<int>(cands.size()) < k - 1) continue;
        clique.assign({root});
        extend_clique(g, clique, cands, k - 1, list.cliques);
    }
    finalize(list);
    return list;
}

CliqueList enumerate_bruteforce(const Graph& g, int k) {
    check_k(k);
    const std::int64_t n = g.vertex_count();
    if (n > kBruteForceVertexLimit)
        raise(ErrorCode::Limit,
              "brute-force enumeration is limited to " +
                  std::to_string(kBruteForceVertexLimit) + " vertices, graph has " +
                  std::to_string(n));

    CliqueList list;
    list.k = k;
    list.source = CliqueStrategy::BruteForce;
    if (k > n) return list;

    std::vector<VertexId> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = static_cast<VertexId>(i);
    while (true) {
        bool is_clique = true;
        for (int i = 0; i < k && is_clique; ++i)
            for (int j = i + 1; j < k; ++j)
                if (!g.has_edge(subset[static_cast<std::size_t>(i)],
                                subset[static_cast<std::size_t>(j)])) {
                    is_clique = false;
                    break;
                }
        if (is_clique) list.cliques.push_back(subset);

        // next k-combination of 0..n-1 in lexicographic order
        int i = k - 1;
        while (i >= 0 &&
               subset[static_cast<std::size_t>(i)] == static_cast<VertexId>(n - k + i))
            --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return list; // generated in lexicographic order already
}

CliqueList enumerate_cliques(const Graph& g, int k, CliqueStrategy strategy,
                             std::int64_t auto_threshold) {
    switch (strategy) {
        case CliqueStrategy::Arboricity: return enumerate_arboricity_style(g, k);
        case CliqueStrategy::Degeneracy: return enumerate_degeneracy_style(g, k);
        case CliqueStrategy::BruteForce: return enumerate_bruteforce(g, k);
        case CliqueStrategy::Auto: {
            auto degen = degeneracy_ordering(g);
            if (degen.degeneracy <= auto_threshold)
                return enumerate_degeneracy_style(g, k);
            return enumerate_arboricity_style(g, k);
        }
    }
    raise(ErrorCode::InvalidArgument, "unknown clique strategy");
}

std::vector<SimplexSet> build_simplex_sets(const Graph& g, int r_max,
                                           CliqueStrategy strategy,
                                           std::int64_t auto_threshold) {
    if (r_max < 0)
        raise(ErrorCode::InvalidArgument, "r_max must be nonnegative");
    std::vector<SimplexSet> sets;
    sets.reserve(static_cast<std::size_t>(r_max) + 1);
    for (int r = 0; r <= r_max; ++r) {
        SimplexSet s;
        s.r = r;
        s.n = g.vertex_count();
        s.simplices = enumerate_cliques(g, r + 1, strategy, auto_threshold).cliques;
        sets.push_back(std::move(s));
    }
    return sets;
}

} // namespace cliquebetti
