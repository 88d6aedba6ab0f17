#ifndef DMT_GRAPH_PROPERTY_HPP
#define DMT_GRAPH_PROPERTY_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dmt/simplex.hpp"

namespace dmt {

/// An edge of K_n, vertices 0-based.
using Edge = std::pair<int, int>;

/// A monotone decreasing graph property: a predicate on edge subsets of K_n.
/// Monotonicity is trusted but spot-checked during complex construction.
struct GraphProperty {
    std::string tag;
    std::function<bool(int n, const std::vector<Edge>&)> predicate;
};

/// Edges of K_n in lexicographic order; their index in this list is the
/// vertex id the edge gets in the property complex.
inline std::vector<Edge> complete_graph_edges(int n) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return edges;
}

/// Greedy proper edge-colouring bound is not exact, so test k-edge-
/// colourability by backtracking (graphs here are desk-scale).
inline bool edge_colourable(int k, const std::vector<Edge>& edges) {
    std::vector<int> colour(edges.size(), -1);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == edges.size()) return true;
        for (int c = 0; c < k; ++c) {
            bool clash = false;
            for (std::size_t j = 0; j < i; ++j) {
                if (colour[j] != c) continue;
                const auto& [a, b] = edges[i];
                const auto& [x, y] = edges[j];
                if (a == x || a == y || b == x || b == y) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            colour[i] = c;
            if (go(i + 1)) return true;
            colour[i] = -1;
        }
        return false;
    };
    return go(0);
}

inline GraphProperty prop_k_edge_colourable(int k) {
    return {"edge-colourable-" + std::to_string(k),
            [k](int, const std::vector<Edge>& edges) {
                return edge_colourable(k, edges);
            }};
}

inline GraphProperty prop_max_edges(int m) {
    return {"max-edges-" + std::to_string(m),
            [m](int, const std::vector<Edge>& edges) {
                return static_cast<int>(edges.size()) <= m;
            }};
}

inline GraphProperty prop_max_degree(int d) {
    return {"max-degree-" + std::to_string(d),
            [d](int n, const std::vector<Edge>& edges) {
                std::vector<int> deg(n, 0);
                for (const auto& [a, b] : edges) {
                    if (++deg[a] > d || ++deg[b] > d) return false;
                }
                return true;
            }};
}

/// The complex whose d-simplices are the (d+1)-edge subgraphs of K_n
/// satisfying prop. Simplices are nonempty edge sets; the complex's vertices
/// are edge indices into complete_graph_edges(n). Enumerates all satisfying
/// subsets bottom-up; a satisfying set with a non-satisfying subset means the
/// property is not monotone decreasing and raises.
inline SimplicialComplex gen_graph_property_complex(int n,
                                                    const GraphProperty& prop) {
    const auto edges = complete_graph_edges(n);
    const int m = static_cast<int>(edges.size());
    if (m >= 25)
        throw UnboundedEnumerationError(
            "graph-property complexes are enumerated over all edge subsets; "
            "K_" + std::to_string(n) + " is too large");
    std::vector<bool> ok(1u << m, false);
    std::vector<Simplex> faces;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<Edge> sub;
        std::vector<Vertex> ids;
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) {
                sub.push_back(edges[j]);
                ids.push_back(j);
            }
        if (!prop.predicate(n, sub)) continue;
        // monotonicity spot-check: every one-smaller subgraph must satisfy
        for (int j = 0; j < m; ++j)
            if ((mask & (1u << j)) && !ok[mask & ~(1u << j)])
                throw PropertyViolationError(
                    "property '" + prop.tag +
                    "' is not monotone decreasing: a satisfying graph has a "
                    "non-satisfying subgraph");
        ok[mask] = true;
        if (mask) faces.emplace_back(ids);
    }
    return SimplicialComplex::from_maximal(faces);
}

}  // namespace dmt

#endif
