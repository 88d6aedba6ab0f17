#ifndef DMT_MODULI_HPP
#define DMT_MODULI_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <vector>

#include "dmt/algorithm.hpp"

namespace dmt {

namespace detail {

/// Boundary-down neighbours of sigma (facets not matched with sigma),
/// lexicographic.
inline std::vector<Simplex> down_neighbours(const Simplex& sigma,
                                            const DiscreteVectorField& V) {
    std::vector<Simplex> out;
    for (const Simplex& tau : facets(sigma))
        if (!V.has_pair(tau, sigma)) out.push_back(tau);
    std::sort(out.begin(), out.end());
    return out;
}

inline void require_enumerable(const ModifiedHasseDiagram& H,
                               std::optional<int> max_len) {
    if (max_len) return;
    if (!is_gradient(H.field(), H.complex()).ok)
        throw UnboundedEnumerationError(
            "field has a closed V-path; flowline enumeration needs an "
            "explicit length cap");
}

}  // namespace detail

/// All legal index-1 flowlines alpha -> beta: alternating V-paths in the
/// dimension band {p, p-1} with no double drop. Deterministic (lexicographic
/// DFS) order.
inline std::vector<Path> enumerate_flowlines_index1(
    const Simplex& alpha, const Simplex& beta, const ModifiedHasseDiagram& H,
    std::optional<int> max_len = std::nullopt) {
    const DiscreteVectorField& V = H.field();
    if (!V.is_critical(alpha) || !V.is_critical(beta))
        throw MalformedPathError("flowline endpoints must be critical");
    if (alpha.dim() != beta.dim() + 1)
        throw MalformedPathError("index-1 enumeration needs dim(alpha) = "
                                 "dim(beta) + 1");
    detail::require_enumerable(H, max_len);
    std::vector<Path> found;
    std::vector<Simplex> nodes = {alpha};
    // at the top of a down-step from sigma
    auto walk = [&](auto&& self, const Simplex& sigma) -> void {
        if (max_len && static_cast<int>(nodes.size()) > *max_len + 1)
            return;  // path length (steps) exceeds the cap
        for (const Simplex& tau : detail::down_neighbours(sigma, V)) {
            nodes.push_back(tau);
            if (tau == beta)
                found.push_back(make_path(nodes, H));
            else if (auto up = V.head_of(tau)) {
                nodes.push_back(*up);
                self(self, *up);
                nodes.pop_back();
            }
            nodes.pop_back();
        }
    };
    walk(walk, alpha);
    std::sort(found.begin(), found.end());
    return found;
}

/// All legal index-2 flowlines alpha -> gamma: upper-band V-path, the unique
/// double drop, then a lower-band V-path ending at gamma.
inline std::vector<Path> enumerate_flowlines_index2(
    const Simplex& alpha, const Simplex& gamma, const ModifiedHasseDiagram& H,
    std::optional<int> max_len = std::nullopt) {
    const DiscreteVectorField& V = H.field();
    if (!V.is_critical(alpha) || !V.is_critical(gamma))
        throw MalformedPathError("flowline endpoints must be critical");
    if (alpha.dim() != gamma.dim() + 2)
        throw MalformedPathError("index-2 enumeration needs dim(alpha) = "
                                 "dim(gamma) + 2");
    detail::require_enumerable(H, max_len);
    std::vector<Path> found;
    std::vector<Simplex> nodes = {alpha};
    auto too_long = [&] {
        return max_len && static_cast<int>(nodes.size()) > *max_len + 1;
    };
    // lower band: nodes ends at an (n-1)-simplex eta; stop at gamma, else
    // climb eta's Morse arrow and descend again.
    auto lower = [&](auto&& self, const Simplex& eta) -> void {
        if (too_long()) return;
        if (eta == gamma) {
            found.push_back(make_path(nodes, H));
            return;
        }
        auto up = V.head_of(eta);
        if (!up) return;  // dead end
        nodes.push_back(*up);
        for (const Simplex& next : detail::down_neighbours(*up, V)) {
            if (next == eta) continue;  // would retraverse the Morse arrow
            nodes.push_back(next);
            self(self, next);
            nodes.pop_back();
        }
        nodes.pop_back();
    };
    // upper band: at sigma of dim n+1; branch on (continue band | double drop)
    auto upper = [&](auto&& self, const Simplex& sigma) -> void {
        if (too_long()) return;
        for (const Simplex& tau : detail::down_neighbours(sigma, V)) {
            nodes.push_back(tau);
            // double drop through tau
            for (const Simplex& eta : detail::down_neighbours(tau, V)) {
                nodes.push_back(eta);
                lower(lower, eta);
                nodes.pop_back();
            }
            // stay in the upper band
            if (auto up = V.head_of(tau)) {
                nodes.push_back(*up);
                self(self, *up);
                nodes.pop_back();
            }
            nodes.pop_back();
        }
    };
    upper(upper, alpha);
    std::sort(found.begin(), found.end());
    return found;
}

/// The moduli space M(alpha, gamma): vertices are the index-2 flowlines,
/// edges join consecutive appended entries of algorithm runs.
struct ModuliSpace {
    Simplex alpha;
    Simplex gamma;
    std::vector<Path> flowlines;                  // sorted
    std::vector<std::set<std::size_t>> adjacency;  // by flowline index

    std::size_t degree(std::size_t i) const { return adjacency[i].size(); }
};

struct Component {
    enum class Kind { path, cycle };
    Kind kind;
    std::vector<std::size_t> members;    // ordered along the component
    std::vector<std::size_t> endpoints;  // 0 or 2 boundary vertices
};

inline ModuliSpace build_moduli(const Simplex& alpha, const Simplex& gamma,
                                const ModifiedHasseDiagram& H,
                                std::optional<int> max_len = std::nullopt) {
    ModuliSpace M;
    M.alpha = alpha;
    M.gamma = gamma;
    M.flowlines = enumerate_flowlines_index2(alpha, gamma, H, max_len);
    M.adjacency.resize(M.flowlines.size());
    std::map<std::vector<Simplex>, std::size_t> index;
    for (std::size_t i = 0; i < M.flowlines.size(); ++i)
        index[M.flowlines[i].nodes] = i;
    auto link = [&](std::size_t i, const Path& G) {
        auto it = index.find(G.nodes);
        if (it == index.end())
            throw InvariantViolationError(
                "algorithm step left the moduli space at " + G.name());
        M.adjacency[i].insert(it->second);
        M.adjacency[it->second].insert(i);
    };
    for (std::size_t i = 0; i < M.flowlines.size(); ++i) {
        const Path& F = M.flowlines[i];
        link(i, alg_list(F, Label::c, H).list[1].flowline);
        if (!is_critical_flowline(F, H))
            link(i, alg_list(F, Label::f, H).list[1].flowline);
    }
    for (std::size_t i = 0; i < M.flowlines.size(); ++i) {
        if (M.degree(i) > 2)
            throw InvariantViolationError("moduli-space vertex of degree " +
                                          std::to_string(M.degree(i)));
        bool crit = is_critical_flowline(M.flowlines[i], H);
        if (crit != (M.degree(i) <= 1))
            throw InvariantViolationError(
                "boundary/critical mismatch at flowline " +
                M.flowlines[i].name());
    }
    return M;
}

/// Connected components, each ordered along its path or cycle; listed by
/// smallest member flowline.
inline std::vector<Component> components(const ModuliSpace& M) {
    std::vector<Component> out;
    std::vector<bool> done(M.flowlines.size(), false);
    for (std::size_t s = 0; s < M.flowlines.size(); ++s) {
        if (done[s]) continue;
        // collect the component
        std::vector<std::size_t> bag = {s};
        done[s] = true;
        for (std::size_t k = 0; k < bag.size(); ++k)
            for (std::size_t j : M.adjacency[bag[k]])
                if (!done[j]) {
                    done[j] = true;
                    bag.push_back(j);
                }
        Component comp;
        std::vector<std::size_t> ends;
        for (std::size_t i : bag)
            if (M.degree(i) <= 1) ends.push_back(i);
        std::sort(ends.begin(), ends.end());
        comp.endpoints = ends;
        comp.kind = ends.empty() ? Component::Kind::cycle
                                 : Component::Kind::path;
        // order members by walking from a deterministic start
        std::size_t start =
            ends.empty() ? *std::min_element(bag.begin(), bag.end())
                         : ends.front();
        std::vector<bool> seen(M.flowlines.size(), false);
        std::size_t cur = start;
        seen[cur] = true;
        comp.members.push_back(cur);
        for (;;) {
            std::optional<std::size_t> next;
            for (std::size_t j : M.adjacency[cur])
                if (!seen[j] && (!next || j < *next)) next = j;
            if (!next) break;
            cur = *next;
            seen[cur] = true;
            comp.members.push_back(cur);
        }
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [&](const Component& a, const Component& b) {
                  return *std::min_element(a.members.begin(),
                                           a.members.end()) <
                         *std::min_element(b.members.begin(), b.members.end());
              });
    return out;
}

/// Boundary flowlines (degree <= 1) with their path signs. Within each path
/// component the two signs cancel.
inline std::vector<std::pair<Path, int>> boundary(const ModuliSpace& M) {
    std::vector<std::pair<Path, int>> out;
    for (std::size_t i = 0; i < M.flowlines.size(); ++i)
        if (M.degree(i) <= 1)
            out.emplace_back(M.flowlines[i], path_sign(M.flowlines[i]));
    return out;
}

/// DOT export with stable vertex order; boundary vertices double-circled.
inline void export_dot(const ModuliSpace& M, std::ostream& os) {
    os << "graph moduli {\n";
    for (std::size_t i = 0; i < M.flowlines.size(); ++i) {
        os << "  v" << i << " [label=\"" << M.flowlines[i].name() << "\"";
        if (M.degree(i) <= 1) os << ", shape=doublecircle";
        os << "];\n";
    }
    for (std::size_t i = 0; i < M.flowlines.size(); ++i)
        for (std::size_t j : M.adjacency[i])
            if (i < j) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
}

}  // namespace dmt

#endif
