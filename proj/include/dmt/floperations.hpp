#ifndef DMT_FLOPERATIONS_HPP
#define DMT_FLOPERATIONS_HPP

#include <vector>

#include "dmt/path.hpp"

namespace dmt {

/// Flop: replace the double-drop middle simplex beta by the unique distinct
/// beta' between the drop's top sigma and bottom gamma. Involution;
/// negates the path sign. Works on legal and illegal index-2 paths alike
/// (the double drop is found by dimension levels only).
inline Path flop(const Path& P, const ModifiedHasseDiagram& H) {
    int i = find_double_drop(P);
    const Simplex& sigma = P.nodes[i];
    const Simplex& beta = P.nodes[i + 1];
    const Simplex& gamma = P.nodes[i + 2];
    if (!gamma.is_face_of(sigma))
        throw MalformedPathError("double-drop top " + sigma.name() +
                                 " does not contain bottom " + gamma.name());
    // sigma has exactly two vertices outside gamma; beta uses one of them
    Simplex alt;
    bool found = false;
    for (Vertex v : sigma.vertices()) {
        if (gamma.has_vertex(v) || beta.has_vertex(v)) continue;
        alt = gamma.with_vertex(v);
        found = true;
        break;
    }
    if (!found)
        throw MalformedPathError("no alternative intermediate for drop " +
                                 sigma.name() + "->" + beta.name() + "->" +
                                 gamma.name());
    std::vector<Simplex> nodes = P.nodes;
    nodes[i + 1] = alt;
    return make_path(std::move(nodes), H);
}

/// Insert: splice the Morse arrow of the noncritical intermediate simplex
/// beta into the flowline. Whether beta is the pair tail (partner above) or
/// the pair head (partner below), the new node sequence inserts
/// [partner, beta] right after the intermediate occurrence, producing an
/// illegal path with exactly one backward step. Negates the sign.
inline Path insert(const Path& P, const ModifiedHasseDiagram& H) {
    int i = find_double_drop(P);
    const Simplex& beta = P.nodes[i + 1];
    const DiscreteVectorField& V = H.field();
    Simplex partner;
    if (auto up = V.head_of(beta))
        partner = *up;
    else if (auto down = V.tail_of(beta))
        partner = *down;
    else
        throw CannotInsertError("intermediate simplex " + beta.name() +
                                " is critical; nothing to Insert");
    std::vector<Simplex> nodes = P.nodes;
    nodes.insert(nodes.begin() + i + 2, {partner, beta});
    return make_path(std::move(nodes), H);
}

/// Cancel: remove a doubled arrow traversal X -> Y -> X (the same
/// modified-Hasse edge walked both ways) together with the middle
/// occurrence. Inverse of Insert; negates the sign.
inline Path cancel(const Path& P, const ModifiedHasseDiagram& H) {
    for (std::size_t i = 0; i + 2 < P.nodes.size(); ++i) {
        if (P.nodes[i] != P.nodes[i + 2]) continue;
        // one of the two traversals is necessarily backward
        std::vector<Simplex> nodes = P.nodes;
        nodes.erase(nodes.begin() + i + 1, nodes.begin() + i + 3);
        return make_path(std::move(nodes), H);
    }
    throw CannotCancelError("no doubled arrow traversal in path " + P.name());
}

}  // namespace dmt

#endif
