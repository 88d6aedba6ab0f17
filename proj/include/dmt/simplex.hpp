#ifndef DMT_SIMPLEX_HPP
#define DMT_SIMPLEX_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dmt/errors.hpp"

namespace dmt {

using Vertex = int;

/// A simplex in canonical form: a strictly increasing vertex sequence.
/// Two simplices are equal iff their sequences are equal; ordering is
/// lexicographic on the sequence, which within a fixed dimension gives the
/// deterministic iteration order used for matrix bases and enumeration.
class Simplex {
  public:
    Simplex() = default;

    Simplex(std::initializer_list<Vertex> verts)
        : Simplex(std::vector<Vertex>(verts)) {}

    explicit Simplex(std::vector<Vertex> verts) : verts_(std::move(verts)) {
        std::sort(verts_.begin(), verts_.end());
        for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
            if (verts_[i] == verts_[i + 1])
                throw MalformedSimplexError("duplicate vertex " +
                                            std::to_string(verts_[i]) +
                                            " in simplex " + joined(verts_));
        if (verts_.empty())
            throw MalformedSimplexError("empty vertex list");
    }

    int dim() const { return static_cast<int>(verts_.size()) - 1; }

    const std::vector<Vertex>& vertices() const { return verts_; }

    bool has_vertex(Vertex v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    /// The facet obtained by deleting the vertex at position i.
    Simplex without_position(int i) const {
        std::vector<Vertex> v = verts_;
        v.erase(v.begin() + i);
        Simplex s;
        s.verts_ = std::move(v);
        return s;
    }

    Simplex with_vertex(Vertex v) const {
        std::vector<Vertex> w = verts_;
        w.push_back(v);
        return Simplex(std::move(w));
    }

    /// True if *this is a face of s (subset of its vertices).
    bool is_face_of(const Simplex& s) const {
        return std::includes(s.verts_.begin(), s.verts_.end(), verts_.begin(),
                             verts_.end());
    }

    bool is_facet_of(const Simplex& s) const {
        return dim() + 1 == s.dim() && is_face_of(s);
    }

    /// Position of vertex v in the sorted sequence, or -1.
    int position_of(Vertex v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        if (it == verts_.end() || *it != v) return -1;
        return static_cast<int>(it - verts_.begin());
    }

    std::string name() const { return joined(verts_); }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) {
        return a.verts_ <=> b.verts_;
    }

  private:
    static std::string joined(const std::vector<Vertex>& v) {
        std::ostringstream os;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << '-';
            os << v[i];
        }
        return os.str();
    }

    std::vector<Vertex> verts_;
};

/// All facets of a simplex (empty for a vertex).
inline std::vector<Simplex> facets(const Simplex& s) {
    std::vector<Simplex> out;
    if (s.dim() == 0) return out;
    out.reserve(s.vertices().size());
    for (int i = 0; i < static_cast<int>(s.vertices().size()); ++i)
        out.push_back(s.without_position(i));
    return out;
}

/// A finite face-closed family of simplices, grouped by dimension.
/// Immutable after construction.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Downward closure of a set of maximal simplices. The vertex universe is
    /// the union of their vertices plus any extra declared vertices.
    static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal,
                                          std::vector<Vertex> declared = {}) {
        SimplicialComplex K;
        std::set<Vertex> universe(declared.begin(), declared.end());
        std::set<Simplex> all;
        std::vector<Simplex> stack(maximal.begin(), maximal.end());
        while (!stack.empty()) {
            Simplex s = stack.back();
            stack.pop_back();
            if (!all.insert(s).second) continue;
            for (Vertex v : s.vertices()) universe.insert(v);
            for (const Simplex& f : facets(s)) stack.push_back(f);
        }
        K.vertices_.assign(universe.begin(), universe.end());
        for (const Simplex& s : all) {
            if (s.dim() >= static_cast<int>(K.by_dim_.size()))
                K.by_dim_.resize(s.dim() + 1);
            K.by_dim_[s.dim()].push_back(s);
        }
        K.members_ = std::move(all);
        return K;
    }

    bool contains(const Simplex& s) const { return members_.count(s) > 0; }

    int top_dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    std::size_t size() const { return members_.size(); }

    bool empty() const { return members_.empty(); }

    /// All p-simplices in lexicographic order (empty list out of range).
    const std::vector<Simplex>& simplices(int p) const {
        static const std::vector<Simplex> none;
        if (p < 0 || p > top_dimension()) return none;
        return by_dim_[p];
    }

    const std::set<Simplex>& all_simplices() const { return members_; }

    const std::vector<Vertex>& vertices() const { return vertices_; }

    /// The simplices with no cofacet, lexicographic within descending dim.
    std::vector<Simplex> maximal_simplices() const {
        std::vector<Simplex> out;
        for (int p = top_dimension(); p >= 0; --p)
            for (const Simplex& s : simplices(p))
                if (cofacets(s).empty()) out.push_back(s);
        return out;
    }

    std::vector<Simplex> cofacets(const Simplex& s) const {
        if (!contains(s))
            throw NotInComplexError("simplex " + s.name() +
                                    " is not in the complex");
        std::vector<Simplex> out;
        for (Vertex v : vertices_) {
            if (s.has_vertex(v)) continue;
            Simplex t = s.with_vertex(v);
            if (contains(t)) out.push_back(t);
        }
        return out;
    }

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (const auto& group : by_dim_) f.push_back(group.size());
        return f;
    }

    long euler_characteristic() const {
        long chi = 0;
        int sign = 1;
        for (const auto& group : by_dim_) {
            chi += sign * static_cast<long>(group.size());
            sign = -sign;
        }
        return chi;
    }

    /// Number of facet relations (Hasse arrows before modification).
    std::size_t facet_relation_count() const {
        std::size_t n = 0;
        for (int p = 1; p <= top_dimension(); ++p)
            n += by_dim_[p].size() * (p + 1);
        return n;
    }

  private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::set<Simplex> members_;
};

inline SimplicialComplex build_complex(const std::vector<Simplex>& maximal) {
    return SimplicialComplex::from_maximal(maximal);
}

/// The full n-simplex on vertices 0..n (2^(n+1)-1 simplices).
inline SimplicialComplex gen_full_simplex(int n) {
    std::vector<Vertex> verts;
    for (int v = 0; v <= n; ++v) verts.push_back(v);
    return build_complex({Simplex(verts)});
}

}  // namespace dmt

#endif
