#ifndef DMT_IO_HPP
#define DMT_IO_HPP

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dmt/field.hpp"
#include "dmt/simplex.hpp"

namespace dmt {

/// Text format for complexes:
///
///   # comment (anywhere)
///   vertices 1 2 3 4
///   maximal 1-2-3
///   maximal 2-3-4
///   pair 1-3 1-2-3          (vector field entry: tail head)
///   value 1-2-3 13          (Morse value)
///
/// `vertices` is optional (the union of the maximal simplices is used, plus
/// any ids listed). `pair` lines give an explicit vector field; `value`
/// lines a Morse function. When both are present, the field induced by the
/// values must equal the explicit field.
struct LoadedComplex {
    SimplicialComplex complex;
    std::optional<DiscreteVectorField> field;
    std::optional<MorseFunction> morse;

    /// The effective field: explicit if given, else induced, else empty.
    DiscreteVectorField effective_field() const {
        if (field) return *field;
        if (morse) return field_from_morse(*morse, complex);
        return DiscreteVectorField{};
    }
};

/// Parses a hyphen-joined simplex name like "1-2-3".
inline Simplex parse_simplex(const std::string& text, int line = 0,
                             int column = 0) {
    std::vector<Vertex> verts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t dash = text.find('-', pos);
        if (dash == std::string::npos) dash = text.size();
        int v;
        auto [ptr, ec] = std::from_chars(text.data() + pos,
                                         text.data() + dash, v);
        if (ec != std::errc{} || ptr != text.data() + dash)
            throw ParseError("bad vertex id in simplex '" + text + "'", line,
                             column + static_cast<int>(pos));
        verts.push_back(v);
        pos = dash + 1;
    }
    if (verts.empty())
        throw ParseError("empty simplex name", line, column);
    try {
        return Simplex(verts);
    } catch (const MalformedSimplexError& e) {
        throw ParseError(e.what(), line, column);
    }
}

inline LoadedComplex load_complex(std::istream& in) {
    std::vector<Vertex> declared;
    std::vector<Simplex> maximal;
    std::vector<std::pair<Simplex, Simplex>> pairs;
    MorseFunction morse;
    bool has_pairs = false, has_values = false;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "vertices") {
            int v;
            while (ls >> v) declared.push_back(v);
            if (!ls.eof())
                throw ParseError("bad vertex id", lineno, 0);
        } else if (key == "maximal") {
            std::string name;
            if (!(ls >> name))
                throw ParseError("maximal needs a simplex", lineno, 0);
            maximal.push_back(parse_simplex(name, lineno));
        } else if (key == "pair") {
            std::string tail, head;
            if (!(ls >> tail >> head))
                throw ParseError("pair needs two simplices", lineno, 0);
            pairs.emplace_back(parse_simplex(tail, lineno),
                               parse_simplex(head, lineno));
            has_pairs = true;
        } else if (key == "value") {
            std::string name;
            double x;
            if (!(ls >> name >> x))
                throw ParseError("value needs a simplex and a number",
                                 lineno, 0);
            morse.values[parse_simplex(name, lineno)] = x;
            has_values = true;
        } else {
            throw ParseError("unknown keyword '" + key + "'", lineno, 0);
        }
        std::string extra;
        if (ls >> extra)
            throw ParseError("trailing content '" + extra + "'", lineno, 0);
    }
    LoadedComplex out;
    out.complex = SimplicialComplex::from_maximal(maximal, declared);
    // semantic field validity is left to validate_field so that the
    // `validate` command can report violations rather than fail to parse
    if (has_pairs) out.field = DiscreteVectorField{pairs};
    if (has_values) {
        for (const Simplex& s : out.complex.all_simplices())
            if (!morse.values.count(s))
                throw ParseError("morse values are not total; missing " +
                                 s.name(), lineno, 0);
        out.morse = std::move(morse);
        if (out.field) {
            DiscreteVectorField induced =
                field_from_morse(*out.morse, out.complex);
            if (induced.pairs() != out.field->pairs())
                throw ParseError("morse values induce a different field than "
                                 "the explicit pairs", lineno, 0);
        }
    }
    return out;
}

/// Shortest decimal that round-trips the double.
inline std::string format_value(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

inline void save_complex(const LoadedComplex& lc, std::ostream& os) {
    os << "vertices";
    for (Vertex v : lc.complex.vertices()) os << ' ' << v;
    os << '\n';
    for (const Simplex& s : lc.complex.maximal_simplices())
        os << "maximal " << s.name() << '\n';
    if (lc.field)
        for (const auto& [tail, head] : lc.field->pairs())
            os << "pair " << tail.name() << ' ' << head.name() << '\n';
    if (lc.morse)
        for (const auto& [s, x] : lc.morse->values)
            os << "value " << s.name() << ' ' << format_value(x) << '\n';
}

}  // namespace dmt

#endif
