#ifndef DMT_FIELD_HPP
#define DMT_FIELD_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmt/simplex.hpp"

namespace dmt {

/// A discrete vector field: a set of facet pairs {tail^(p) < head^(p+1)} with
/// each simplex in at most one pair. Construction keeps the raw pair list so
/// that invalid inputs can be diagnosed by validate_field.
class DiscreteVectorField {
  public:
    DiscreteVectorField() = default;

    explicit DiscreteVectorField(
        std::vector<std::pair<Simplex, Simplex>> pairs)
        : pairs_(std::move(pairs)) {
        std::sort(pairs_.begin(), pairs_.end());
        for (const auto& [tail, head] : pairs_) {
            up_.emplace(tail, head);
            down_.emplace(head, tail);
        }
    }

    const std::vector<std::pair<Simplex, Simplex>>& pairs() const {
        return pairs_;
    }

    std::size_t size() const { return pairs_.size(); }

    bool is_tail(const Simplex& s) const { return up_.count(s) > 0; }
    bool is_head(const Simplex& s) const { return down_.count(s) > 0; }
    bool is_critical(const Simplex& s) const {
        return !is_tail(s) && !is_head(s);
    }

    std::optional<Simplex> head_of(const Simplex& tail) const {
        auto it = up_.find(tail);
        if (it == up_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<Simplex> tail_of(const Simplex& head) const {
        auto it = down_.find(head);
        if (it == down_.end()) return std::nullopt;
        return it->second;
    }

    bool has_pair(const Simplex& tail, const Simplex& head) const {
        auto it = up_.find(tail);
        return it != up_.end() && it->second == head;
    }

  private:
    std::vector<std::pair<Simplex, Simplex>> pairs_;
    std::map<Simplex, Simplex> up_;
    std::map<Simplex, Simplex> down_;
};

struct FieldValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks that every pair is a facet relation in K and no simplex occurs in
/// more than one pair.
inline FieldValidationReport validate_field(const DiscreteVectorField& V,
                                            const SimplicialComplex& K) {
    FieldValidationReport report;
    std::map<Simplex, int> seen;
    for (const auto& [tail, head] : V.pairs()) {
        if (!K.contains(tail) || !K.contains(head))
            report.violations.push_back("pair (" + tail.name() + ", " +
                                        head.name() +
                                        ") involves a simplex not in the "
                                        "complex");
        else if (!tail.is_facet_of(head))
            report.violations.push_back("pair (" + tail.name() + ", " +
                                        head.name() +
                                        ") is not a facet relation");
        ++seen[tail];
        ++seen[head];
    }
    for (const auto& [s, count] : seen)
        if (count > 1)
            report.violations.push_back("simplex " + s.name() + " occurs in " +
                                        std::to_string(count) + " pairs");
    report.ok = report.violations.empty();
    return report;
}

enum class CriticalityClass { critical, head_of_arrow, tail_of_arrow };

inline CriticalityClass classify(const Simplex& s,
                                 const DiscreteVectorField& V) {
    if (V.is_head(s)) return CriticalityClass::head_of_arrow;
    if (V.is_tail(s)) return CriticalityClass::tail_of_arrow;
    return CriticalityClass::critical;
}

/// All critical p-simplices in lexicographic order.
inline std::vector<Simplex> critical_simplices(const SimplicialComplex& K,
                                               const DiscreteVectorField& V,
                                               int p) {
    std::vector<Simplex> out;
    for (const Simplex& s : K.simplices(p))
        if (V.is_critical(s)) out.push_back(s);
    return out;
}

/// A discrete Morse function: a total real-valued assignment on K.
struct MorseFunction {
    std::map<Simplex, double> values;

    double at(const Simplex& s) const {
        auto it = values.find(s);
        if (it == values.end())
            throw InvalidMorseFunctionError("no Morse value for simplex " +
                                            s.name());
        return it->second;
    }
};

/// The canonical Morse function f = dim; its induced field is empty.
inline MorseFunction canonical_morse_function(const SimplicialComplex& K) {
    MorseFunction f;
    for (const Simplex& s : K.all_simplices())
        f.values[s] = static_cast<double>(s.dim());
    return f;
}

/// The field induced by a Morse function: all facet pairs (gamma, alpha) with
/// f(gamma) >= f(alpha). Throws if f violates the defining constraints (some
/// simplex with two or more exceptional neighbours in one adjacent dimension).
inline DiscreteVectorField field_from_morse(const MorseFunction& f,
                                            const SimplicialComplex& K) {
    std::vector<std::pair<Simplex, Simplex>> pairs;
    for (int p = 0; p <= K.top_dimension(); ++p) {
        for (const Simplex& beta : K.simplices(p)) {
            double fb = f.at(beta);
            int below = 0;
            if (p >= 1)
                for (const Simplex& gamma : facets(beta))
                    if (f.at(gamma) >= fb) ++below;
            int above = 0;
            for (const Simplex& alpha : K.cofacets(beta)) {
                if (f.at(alpha) <= fb) {
                    ++above;
                    pairs.emplace_back(beta, alpha);
                }
            }
            if (below > 1 || above > 1)
                throw InvalidMorseFunctionError(
                    "simplex " + beta.name() + " has " +
                    std::to_string(below > 1 ? below : above) +
                    " exceptional neighbours " +
                    (below > 1 ? "below" : "above"));
        }
    }
    DiscreteVectorField V{std::move(pairs)};
    auto report = validate_field(V, K);
    if (!report.ok)
        throw InvalidMorseFunctionError(
            "induced pairing is not a matching: " + report.violations.front());
    return V;
}

/// Gradient test: true iff no nontrivial closed V-path exists. Works on the
/// derived directed graph over p-simplices (a -> a' iff exists b with
/// (a,b) in V and a' != a a facet of b), per dimension. On failure the
/// returned witness is the closed V-path a0, b0, a1, b1, ..., a0.
struct GradientCheck {
    bool ok = true;
    std::vector<Simplex> witness;  // alternating p / p+1 simplices, closed
};

inline GradientCheck is_gradient(const DiscreteVectorField& V,
                                 const SimplicialComplex& K) {
    for (int p = 0; p < K.top_dimension(); ++p) {
        // successor edges among p-simplices
        std::map<Simplex, std::vector<std::pair<Simplex, Simplex>>> next;
        for (const auto& [tail, head] : V.pairs()) {
            if (tail.dim() != p) continue;
            for (const Simplex& a : facets(head))
                if (a != tail) next[tail].emplace_back(a, head);
        }
        std::map<Simplex, int> colour;  // 0 unseen, 1 on chain, 2 done
        struct Dfs {
            const std::map<Simplex,
                           std::vector<std::pair<Simplex, Simplex>>>& next;
            std::map<Simplex, int>& colour;
            std::vector<Simplex> chain;  // alternating a, b, a, ...
            std::vector<Simplex>* witness;
            bool visit(const Simplex& a) {
                colour[a] = 1;
                chain.push_back(a);
                auto it = next.find(a);
                if (it != next.end()) {
                    for (const auto& [a2, head] : it->second) {
                        chain.push_back(head);
                        int c = colour[a2];
                        if (c == 1) {
                            auto pos =
                                std::find(chain.begin(), chain.end(), a2);
                            witness->assign(pos, chain.end());
                            witness->push_back(a2);
                            return false;
                        }
                        if (c == 0 && !visit(a2)) return false;
                        chain.pop_back();
                    }
                }
                chain.pop_back();
                colour[a] = 2;
                return true;
            }
        };
        for (const auto& [start, edges] : next) {
            if (colour[start]) continue;
            GradientCheck result;
            Dfs dfs{next, colour, {}, &result.witness};
            if (!dfs.visit(start)) {
                result.ok = false;
                return result;
            }
        }
    }
    return GradientCheck{};
}

}  // namespace dmt

#endif
