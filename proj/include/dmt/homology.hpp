#ifndef DMT_HOMOLOGY_HPP
#define DMT_HOMOLOGY_HPP

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "dmt/moduli.hpp"

namespace dmt {

/// An integer matrix of a boundary map C_p -> C_{p-1} with named bases.
struct DifferentialMatrix {
    int p = 0;
    std::vector<Simplex> rows;  // basis of C_{p-1}
    std::vector<Simplex> cols;  // basis of C_p
    std::vector<std::vector<long long>> entries;  // rows x cols

    long long at(std::size_t r, std::size_t c) const {
        return entries[r][c];
    }
};

/// entry(tau, sigma) = arrow_sign(sigma, tau) when tau is a facet of sigma.
inline DifferentialMatrix simplicial_boundary(const SimplicialComplex& K,
                                              int p) {
    DifferentialMatrix d;
    d.p = p;
    d.rows = K.simplices(p - 1);
    d.cols = K.simplices(p);
    d.entries.assign(d.rows.size(),
                     std::vector<long long>(d.cols.size(), 0));
    for (std::size_t c = 0; c < d.cols.size(); ++c)
        for (std::size_t r = 0; r < d.rows.size(); ++r)
            if (d.rows[r].is_facet_of(d.cols[c]))
                d.entries[r][c] = arrow_sign(d.cols[c], d.rows[r]);
    return d;
}

/// entry(beta, alpha) = signed count of index-1 flowlines alpha -> beta.
inline DifferentialMatrix morse_differential(
    const SimplicialComplex& K, const DiscreteVectorField& V,
    const ModifiedHasseDiagram& H, int p,
    std::optional<int> max_len = std::nullopt) {
    DifferentialMatrix d;
    d.p = p;
    d.rows = critical_simplices(K, V, p - 1);
    d.cols = critical_simplices(K, V, p);
    d.entries.assign(d.rows.size(),
                     std::vector<long long>(d.cols.size(), 0));
    for (std::size_t c = 0; c < d.cols.size(); ++c)
        for (std::size_t r = 0; r < d.rows.size(); ++r) {
            long long sum = 0;
            for (const Path& F :
                 enumerate_flowlines_index1(d.cols[c], d.rows[r], H, max_len))
                sum += path_sign(F);
            d.entries[r][c] = sum;
        }
    return d;
}

struct DSquaredReport {
    bool ok = true;
    std::string alpha;  // column of d_high
    std::string gamma;  // row of d_low
    long long value = 0;
};

/// Checks d_low . d_high = 0; on failure names the first nonzero entry.
inline DSquaredReport verify_d_squared(const DifferentialMatrix& d_high,
                                       const DifferentialMatrix& d_low) {
    if (d_low.cols != d_high.rows)
        throw Error("verify_d_squared: bases are not compatible");
    for (std::size_t r = 0; r < d_low.rows.size(); ++r)
        for (std::size_t c = 0; c < d_high.cols.size(); ++c) {
            long long v = 0;
            for (std::size_t k = 0; k < d_low.cols.size(); ++k)
                v += d_low.entries[r][k] * d_high.entries[k][c];
            if (v != 0)
                return {false, d_high.cols[c].name(), d_low.rows[r].name(),
                        v};
        }
    return {};
}

struct SmithResult {
    int rank = 0;
    std::vector<long long> factors;  // d1 | d2 | ... , all positive
};

/// Smith normal form over the integers, pivoting on the minimal nonzero
/// absolute value to limit entry growth. Exact; desk-scale matrices only.
inline SmithResult smith_normal_form(std::vector<std::vector<long long>> m) {
    SmithResult out;
    std::size_t nr = m.size();
    std::size_t nc = nr ? m[0].size() : 0;
    std::size_t t = 0;
    while (t < nr && t < nc) {
        // find the minimal-abs nonzero entry in the remaining block
        std::size_t pr = t, pc = t;
        long long best = 0;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (m[i][j] != 0 &&
                    (best == 0 || std::llabs(m[i][j]) < best)) {
                    best = std::llabs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[t], m[pr]);
        for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][t], m[i][pc]);
        bool reduced = true;
        for (std::size_t i = t + 1; i < nr; ++i) {
            long long q = m[i][t] / m[t][t];
            if (q)
                for (std::size_t j = t; j < nc; ++j)
                    m[i][j] -= q * m[t][j];
            if (m[i][t]) reduced = false;
        }
        for (std::size_t j = t + 1; j < nc; ++j) {
            long long q = m[t][j] / m[t][t];
            if (q)
                for (std::size_t i = t; i < nr; ++i)
                    m[i][j] -= q * m[i][t];
            if (m[t][j]) reduced = false;
        }
        if (!reduced) continue;  // smaller remainders exist; re-pivot
        // ensure the pivot divides the rest of the block
        long long piv = m[t][t];
        bool divides = true;
        for (std::size_t i = t + 1; i < nr && divides; ++i)
            for (std::size_t j = t + 1; j < nc; ++j)
                if (m[i][j] % piv != 0) {
                    // fold row i into row t to create a smaller remainder
                    for (std::size_t l = t; l < nc; ++l) m[t][l] += m[i][l];
                    divides = false;
                    break;
                }
        if (!divides) continue;
        out.factors.push_back(piv < 0 ? -piv : piv);
        ++t;
    }
    out.rank = static_cast<int>(out.factors.size());
    return out;
}

inline SmithResult smith_normal_form(const DifferentialMatrix& d) {
    return smith_normal_form(d.entries);
}

/// Homology of a chain complex given per-dimension ranks and the boundary
/// matrices d[p] : C_p -> C_{p-1} for p = 1..top.
struct HomologyGroup {
    int betti = 0;
    std::vector<long long> torsion;  // each > 1, dividing the next
};

struct HomologyResult {
    std::vector<HomologyGroup> groups;  // by dimension

    std::string report() const {
        std::string s;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            s += "H_" + std::to_string(i) + " = ";
            const HomologyGroup& g = groups[i];
            std::string terms;
            if (g.betti == 1)
                terms = "Z";
            else if (g.betti > 1)
                terms = "Z^" + std::to_string(g.betti);
            for (long long d : g.torsion) {
                if (!terms.empty()) terms += " + ";
                terms += "Z/" + std::to_string(d);
            }
            s += terms.empty() ? "0" : terms;
            s += "\n";
        }
        return s;
    }

    friend bool operator==(const HomologyResult& a, const HomologyResult& b) {
        auto trimmed = [](const HomologyResult& h) {
            std::vector<HomologyGroup> g = h.groups;
            while (!g.empty() && g.back().betti == 0 &&
                   g.back().torsion.empty())
                g.pop_back();
            return g;
        };
        auto ga = trimmed(a), gb = trimmed(b);
        if (ga.size() != gb.size()) return false;
        for (std::size_t i = 0; i < ga.size(); ++i)
            if (ga[i].betti != gb[i].betti ||
                ga[i].torsion != gb[i].torsion)
                return false;
        return true;
    }
};

inline HomologyResult homology(const std::vector<std::size_t>& chain_ranks,
                               const std::vector<DifferentialMatrix>& diffs) {
    // diffs[k] is the boundary C_{k+1} -> C_k; verify composability and d^2
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
        auto rep = verify_d_squared(diffs[k + 1], diffs[k]);
        if (!rep.ok)
            throw InvariantViolationError(
                "d^2 != 0: <dd(" + rep.alpha + "), " + rep.gamma +
                "> = " + std::to_string(rep.value));
    }
    HomologyResult H;
    for (std::size_t i = 0; i < chain_ranks.size(); ++i) {
        SmithResult low =  // rank of d_i : C_i -> C_{i-1}
            (i >= 1 && i - 1 < diffs.size()) ? smith_normal_form(diffs[i - 1])
                                             : SmithResult{};
        SmithResult high =  // factors of d_{i+1} : C_{i+1} -> C_i
            (i < diffs.size()) ? smith_normal_form(diffs[i]) : SmithResult{};
        HomologyGroup g;
        g.betti = static_cast<int>(chain_ranks[i]) - low.rank - high.rank;
        for (long long f : high.factors)
            if (f > 1) g.torsion.push_back(f);
        H.groups.push_back(std::move(g));
    }
    return H;
}

/// Brute-force homology of the full simplicial chain complex.
inline HomologyResult simplicial_homology_oracle(const SimplicialComplex& K) {
    std::vector<std::size_t> ranks;
    std::vector<DifferentialMatrix> diffs;
    for (int p = 0; p <= K.top_dimension(); ++p) {
        ranks.push_back(K.simplices(p).size());
        if (p >= 1) diffs.push_back(simplicial_boundary(K, p));
    }
    return homology(ranks, diffs);
}

/// Homology of the Morse complex of (K, V).
inline HomologyResult morse_homology(const SimplicialComplex& K,
                                     const DiscreteVectorField& V,
                                     const ModifiedHasseDiagram& H,
                                     std::optional<int> max_len
                                     = std::nullopt) {
    std::vector<std::size_t> ranks;
    std::vector<DifferentialMatrix> diffs;
    for (int p = 0; p <= K.top_dimension(); ++p) {
        ranks.push_back(critical_simplices(K, V, p).size());
        if (p >= 1) diffs.push_back(morse_differential(K, V, H, p, max_len));
    }
    return homology(ranks, diffs);
}

}  // namespace dmt

#endif
