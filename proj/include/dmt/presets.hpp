#ifndef DMT_PRESETS_HPP
#define DMT_PRESETS_HPP

#include <utility>
#include <vector>

#include "dmt/field.hpp"
#include "dmt/simplex.hpp"

namespace dmt {

/// Boundary of the tetrahedron on vertices 1-4 (a 2-sphere) with a gradient
/// field leaving exactly two critical simplices: 123 and 4.
inline std::pair<SimplicialComplex, DiscreteVectorField> gen_sphere_preset() {
    SimplicialComplex K = build_complex(
        {Simplex{1, 2, 3}, Simplex{1, 2, 4}, Simplex{1, 3, 4},
         Simplex{2, 3, 4}});
    DiscreteVectorField V{{
        {Simplex{1, 2}, Simplex{1, 2, 4}},
        {Simplex{1, 3}, Simplex{1, 3, 4}},
        {Simplex{2, 3}, Simplex{2, 3, 4}},
        {Simplex{1}, Simplex{1, 4}},
        {Simplex{2}, Simplex{2, 4}},
        {Simplex{3}, Simplex{3, 4}},
    }};
    return {std::move(K), std::move(V)};
}

/// The 6-vertex triangulation of the real projective plane (f-vector
/// (6,15,10)) with a gradient field whose critical simplices are the
/// triangle 456, the edge 13 and the vertex 1.
inline std::pair<SimplicialComplex, DiscreteVectorField> gen_rp2_preset() {
    SimplicialComplex K = build_complex(
        {Simplex{4, 5, 6}, Simplex{2, 4, 5}, Simplex{1, 5, 6},
         Simplex{3, 4, 6}, Simplex{1, 2, 4}, Simplex{1, 3, 4},
         Simplex{2, 3, 6}, Simplex{1, 2, 6}, Simplex{1, 3, 5},
         Simplex{2, 3, 5}});
    DiscreteVectorField V{{
        {Simplex{2}, Simplex{1, 2}},
        {Simplex{3}, Simplex{2, 3}},
        {Simplex{4}, Simplex{2, 4}},
        {Simplex{5}, Simplex{3, 5}},
        {Simplex{6}, Simplex{1, 6}},
        {Simplex{3, 4}, Simplex{1, 3, 4}},
        {Simplex{4, 6}, Simplex{3, 4, 6}},
        {Simplex{3, 6}, Simplex{2, 3, 6}},
        {Simplex{2, 6}, Simplex{1, 2, 6}},
        {Simplex{1, 4}, Simplex{1, 2, 4}},
        {Simplex{2, 5}, Simplex{2, 3, 5}},
        {Simplex{1, 5}, Simplex{1, 3, 5}},
        {Simplex{4, 5}, Simplex{2, 4, 5}},
        {Simplex{5, 6}, Simplex{1, 5, 6}},
    }};
    return {std::move(K), std::move(V)};
}

/// Two triangles glued along edge 23.
inline SimplicialComplex gen_two_triangle_complex() {
    return build_complex({Simplex{1, 2, 3}, Simplex{2, 3, 4}});
}

/// A gradient field on the two-triangle complex with the single critical
/// simplex 4; admits the V-path 13 -> 123 -> 23 -> 2 -> 24 -> 4.
inline DiscreteVectorField gen_two_triangle_field() {
    return DiscreteVectorField{{
        {Simplex{1, 3}, Simplex{1, 2, 3}},
        {Simplex{1}, Simplex{1, 2}},
        {Simplex{3}, Simplex{2, 3}},
        {Simplex{2}, Simplex{2, 4}},
        {Simplex{3, 4}, Simplex{2, 3, 4}},
    }};
}

/// A Morse function on the two-triangle complex whose induced field equals
/// gen_two_triangle_field (one critical simplex, the vertex valued 0).
inline MorseFunction gen_two_triangle_morse() {
    MorseFunction f;
    f.values[Simplex{1}] = 3;
    f.values[Simplex{2}] = 1.5;
    f.values[Simplex{3}] = 2.1;
    f.values[Simplex{4}] = 0;
    f.values[Simplex{1, 2}] = 2;
    f.values[Simplex{1, 3}] = 15;
    f.values[Simplex{2, 3}] = 2;
    f.values[Simplex{2, 4}] = 1.2;
    f.values[Simplex{3, 4}] = 12;
    f.values[Simplex{1, 2, 3}] = 13;
    f.values[Simplex{2, 3, 4}] = 11;
    return f;
}

}  // namespace dmt

#endif
