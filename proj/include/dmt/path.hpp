#ifndef DMT_PATH_HPP
#define DMT_PATH_HPP

#include <string>
#include <vector>

#include "dmt/hasse.hpp"

namespace dmt {

/// An undirected walk in the modified Hasse diagram. nodes has one more
/// entry than there are steps; backward[i] records whether step i traverses
/// its arrow against the arrow's direction. A down-step sigma -> tau is
/// backward exactly when (tau, sigma) is a Morse pair (the arrow points up);
/// an up-step tau -> sigma is backward exactly when it is not a Morse pair.
struct Path {
    std::vector<Simplex> nodes;
    std::vector<bool> backward;

    int length() const { return static_cast<int>(backward.size()); }

    int index() const { return nodes.front().dim() - nodes.back().dim(); }

    /// All steps forward and no two consecutive dimension raises.
    bool is_legal() const {
        for (int i = 0; i < length(); ++i) {
            if (backward[i]) return false;
            if (i + 1 < length() && nodes[i + 1].dim() > nodes[i].dim() &&
                nodes[i + 2].dim() > nodes[i + 1].dim())
                return false;
        }
        return true;
    }

    int backward_count() const {
        int n = 0;
        for (bool b : backward) n += b ? 1 : 0;
        return n;
    }

    /// Exactly one backward arrow traversal.
    bool is_illegal() const { return backward_count() == 1; }

    std::string name() const {
        std::string s;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (i) s += ",";
            s += nodes[i].name();
        }
        return s;
    }

    friend bool operator==(const Path& a, const Path& b) {
        return a.nodes == b.nodes;
    }
    friend auto operator<=>(const Path& a, const Path& b) {
        return a.nodes <=> b.nodes;
    }
};

/// Builds a path through H from a node sequence, deriving traversal flags.
/// Each consecutive pair must be a facet relation in the complex.
inline Path make_path(std::vector<Simplex> nodes,
                      const ModifiedHasseDiagram& H) {
    if (nodes.size() < 2)
        throw MalformedPathError("a path needs at least one step");
    Path P;
    P.backward.reserve(nodes.size() - 1);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const Simplex& a = nodes[i];
        const Simplex& b = nodes[i + 1];
        bool down = b.is_facet_of(a);
        bool up = a.is_facet_of(b);
        if (!down && !up)
            throw MalformedPathError("consecutive simplices " + a.name() +
                                     " and " + b.name() +
                                     " are not a facet pair");
        if (down)
            P.backward.push_back(H.field().has_pair(b, a));
        else
            P.backward.push_back(!H.field().has_pair(a, b));
    }
    P.nodes = std::move(nodes);
    return P;
}

/// theta(P) = (prod of arrow signs) * (-1)^((l - Ind)/2). Backward steps
/// contribute the same arrow sign as forward ones.
inline int path_sign(const Path& P) {
    int prod = 1;
    for (std::size_t i = 0; i + 1 < P.nodes.size(); ++i) {
        const Simplex& a = P.nodes[i];
        const Simplex& b = P.nodes[i + 1];
        prod *= (a.dim() > b.dim()) ? arrow_sign(a, b) : arrow_sign(b, a);
    }
    int k = (P.length() - P.index()) / 2;
    return prod * (k % 2 == 0 ? 1 : -1);
}

inline Path compose(const Path& P1, const Path& P2) {
    if (P1.nodes.back() != P2.nodes.front())
        throw EndpointMismatchError("cannot compose: " +
                                    P1.nodes.back().name() + " != " +
                                    P2.nodes.front().name());
    Path P = P1;
    P.nodes.insert(P.nodes.end(), P2.nodes.begin() + 1, P2.nodes.end());
    P.backward.insert(P.backward.end(), P2.backward.begin(),
                      P2.backward.end());
    return P;
}

/// The unique step position i where the dimension descends at both steps i
/// and i+1 (by levels, ignoring traversal direction).
inline int find_double_drop(const Path& P) {
    if (P.index() != 2)
        throw MalformedPathError("find_double_drop requires index 2, got " +
                                 std::to_string(P.index()));
    int found = -1;
    for (int i = 0; i + 1 < P.length(); ++i) {
        if (P.nodes[i + 1].dim() < P.nodes[i].dim() &&
            P.nodes[i + 2].dim() < P.nodes[i + 1].dim()) {
            if (found >= 0)
                throw MalformedPathError("multiple double drops in path " +
                                         P.name());
            found = i;
        }
    }
    if (found < 0)
        throw MalformedPathError("no double drop in path " + P.name());
    return found;
}

/// The middle simplex of the double drop.
inline Simplex intermediate_simplex(const Path& P) {
    return P.nodes[find_double_drop(P) + 1];
}

/// A flowline here is a legal index-2 path between critical endpoints.
inline bool is_flowline(const Path& P, const ModifiedHasseDiagram& H) {
    if (P.index() != 2 || !P.is_legal()) return false;
    if (!H.field().is_critical(P.nodes.front()) ||
        !H.field().is_critical(P.nodes.back()))
        return false;
    int drops = 0;
    for (int i = 0; i + 1 < P.length(); ++i)
        if (P.nodes[i + 1].dim() < P.nodes[i].dim() &&
            P.nodes[i + 2].dim() < P.nodes[i + 1].dim())
            ++drops;
    return drops == 1;
}

/// A critical flowline has a critical intermediate simplex.
inline bool is_critical_flowline(const Path& P,
                                 const ModifiedHasseDiagram& H) {
    return H.field().is_critical(intermediate_simplex(P));
}

}  // namespace dmt

#endif
