#ifndef DMT_HASSE_HPP
#define DMT_HASSE_HPP

#include <map>
#include <vector>

#include "dmt/field.hpp"
#include "dmt/simplex.hpp"

namespace dmt {

/// Sign of the Hasse arrow between sigma and its facet tau = sigma \ {v_i}:
/// (-1)^i with i the 0-based position of v_i in sigma's sorted vertices.
/// The sign is the same whichever way the arrow points.
inline int arrow_sign(const Simplex& sigma, const Simplex& tau) {
    if (!tau.is_facet_of(sigma))
        throw MalformedPathError("arrow_sign: " + tau.name() +
                                 " is not a facet of " + sigma.name());
    for (int i = 0; i < static_cast<int>(sigma.vertices().size()); ++i)
        if (!tau.has_vertex(sigma.vertices()[i])) return i % 2 == 0 ? 1 : -1;
    throw MalformedPathError("arrow_sign: no removed vertex found");
}

struct Arrow {
    Simplex from;
    Simplex to;
    bool morse_up;  // reversed pair arrow (points up one dimension)
    int sign;
};

/// The Hasse diagram of K with every matched facet arrow reversed to point
/// upward. Holds the complex and field; all path machinery queries it.
class ModifiedHasseDiagram {
  public:
    ModifiedHasseDiagram(SimplicialComplex K, DiscreteVectorField V)
        : K_(std::move(K)), V_(std::move(V)) {
        for (int p = 1; p <= K_.top_dimension(); ++p) {
            for (const Simplex& sigma : K_.simplices(p)) {
                for (const Simplex& tau : facets(sigma)) {
                    int s = arrow_sign(sigma, tau);
                    if (V_.has_pair(tau, sigma))
                        arrows_.push_back({tau, sigma, true, s});
                    else
                        arrows_.push_back({sigma, tau, false, s});
                }
            }
        }
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            out_[arrows_[i].from].push_back(i);
    }

    const SimplicialComplex& complex() const { return K_; }
    const DiscreteVectorField& field() const { return V_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t arrow_count() const { return arrows_.size(); }

    std::size_t morse_up_count() const { return V_.size(); }

    /// Arrows leaving s, in construction order.
    std::vector<Arrow> arrows_from(const Simplex& s) const {
        auto it = out_.find(s);
        if (it == out_.end()) return {};
        std::vector<Arrow> result;
        result.reserve(it->second.size());
        for (std::size_t i : it->second) result.push_back(arrows_[i]);
        return result;
    }

    /// True if the diagram has an arrow from `from` to `to`.
    bool has_arrow(const Simplex& from, const Simplex& to) const {
        if (from.dim() < to.dim())  // up: only reversed pair arrows
            return V_.has_pair(from, to);
        return from.dim() == to.dim() + 1 && to.is_facet_of(from) &&
               !V_.has_pair(to, from);
    }

  private:
    SimplicialComplex K_;
    DiscreteVectorField V_;
    std::vector<Arrow> arrows_;
    std::map<Simplex, std::vector<std::size_t>> out_;
};

inline ModifiedHasseDiagram build_modified_hasse(const SimplicialComplex& K,
                                                 const DiscreteVectorField& V) {
    auto report = validate_field(V, K);
    if (!report.ok)
        throw InvalidMorseFunctionError("invalid field: " +
                                        report.violations.front());
    return ModifiedHasseDiagram(K, V);
}

}  // namespace dmt

#endif
