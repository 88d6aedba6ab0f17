#ifndef DMT_RANDOM_FIELD_HPP
#define DMT_RANDOM_FIELD_HPP

#include <random>
#include <vector>

#include "dmt/field.hpp"

namespace dmt {

/// A random gradient vector field on K: facet pairs are visited in a
/// seeded shuffle and added greedily whenever both simplices are unmatched
/// and the field stays acyclic. Deterministic per seed.
inline DiscreteVectorField random_gradient_field(const SimplicialComplex& K,
                                                 unsigned seed) {
    std::vector<std::pair<Simplex, Simplex>> candidates;
    for (int p = 1; p <= K.top_dimension(); ++p)
        for (const Simplex& sigma : K.simplices(p))
            for (const Simplex& tau : facets(sigma))
                candidates.emplace_back(tau, sigma);
    std::mt19937 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::set<Simplex> matched;
    std::vector<std::pair<Simplex, Simplex>> chosen;
    for (const auto& [tail, head] : candidates) {
        if (matched.count(tail) || matched.count(head)) continue;
        chosen.emplace_back(tail, head);
        if (!is_gradient(DiscreteVectorField{chosen}, K).ok) {
            chosen.pop_back();
            continue;
        }
        matched.insert(tail);
        matched.insert(head);
    }
    return DiscreteVectorField{chosen};
}

}  // namespace dmt

#endif
