// Command-line front end for the discrete Morse engine.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dmt/dmt.hpp"

namespace {

// Resolve an input argument: a preset name or a path to a complex file.
dmt::LoadedComplex resolve_input(const std::string& input) {
    if (input == "sphere") {
        auto [K, V] = dmt::gen_sphere_preset();
        return {std::move(K), std::move(V), std::nullopt};
    }
    if (input == "rp2") {
        auto [K, V] = dmt::gen_rp2_preset();
        return {std::move(K), std::move(V), std::nullopt};
    }
    if (input == "two-triangle")
        return {dmt::gen_two_triangle_complex(), dmt::gen_two_triangle_field(),
                std::nullopt};
    std::ifstream in(input);
    if (!in) throw dmt::ParseError("cannot open file '" + input + "'", 0, 0);
    return dmt::load_complex(in);
}

dmt::GraphProperty parse_property(const std::string& text) {
    auto tail_int = [&](const std::string& prefix) -> std::optional<int> {
        if (text.rfind(prefix, 0) != 0) return std::nullopt;
        return std::stoi(text.substr(prefix.size()));
    };
    if (auto k = tail_int("edge-colourable-"))
        return dmt::prop_k_edge_colourable(*k);
    if (auto m = tail_int("max-edges-")) return dmt::prop_max_edges(*m);
    if (auto d = tail_int("max-degree-")) return dmt::prop_max_degree(*d);
    throw dmt::ParseError("unknown graph property '" + text + "'", 0, 0);
}

dmt::Path parse_flowline(const std::string& text,
                         const dmt::ModifiedHasseDiagram& H) {
    std::vector<dmt::Simplex> nodes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        nodes.push_back(dmt::parse_simplex(item));
    return dmt::make_path(std::move(nodes), H);
}

void print_trace(const dmt::AlgOutcome& out, std::ostream& os) {
    for (const auto& [F, label] : out.list)
        os << dmt::label_char(label) << '\t'
           << (dmt::path_sign(F) > 0 ? "+1" : "-1") << '\t' << F.name()
           << '\n';
    if (out.status == dmt::AlgStatus::Cycled)
        os << "# cycled, period " << out.period << ", " << out.flops
           << " flops, " << out.inserts << " inserts, " << out.cancels
           << " cancels\n";
    else
        os << "# terminated, " << out.flops << " flops, " << out.inserts
           << " inserts, " << out.cancels << " cancels\n";
}

void print_matrix(const dmt::DifferentialMatrix& d, std::ostream& os) {
    os << "p " << d.p << '\n';
    os << "rows";
    for (const auto& s : d.rows) os << ' ' << s.name();
    os << '\n' << "cols";
    for (const auto& s : d.cols) os << ' ' << s.name();
    os << '\n';
    for (const auto& row : d.entries) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Morse theory engine"};
    app.require_subcommand(1);

    std::string input, alpha_name, gamma_name, from, output, property;
    std::string start = "c";
    int p = 1, n = 2;
    std::optional<int> max_len;
    unsigned seed = 0;
    bool simplicial = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input,
                        "complex file or preset (sphere, rp2, two-triangle)")
            ->required();
    };

    auto* validate = app.add_subcommand("validate", "check field validity");
    add_input(validate);

    auto* critical = app.add_subcommand("critical", "list critical simplices");
    add_input(critical);
    critical->add_option("-p,--dim", p, "restrict to one dimension");
    bool p_given = false;
    critical->callback([&] { p_given = critical->count("-p") > 0; });

    auto* flow = app.add_subcommand("flowlines", "enumerate flowlines");
    add_input(flow);
    flow->add_option("--alpha", alpha_name)->required();
    flow->add_option("--gamma", gamma_name)->required();
    flow->add_option("--max-len", max_len);

    auto* moduli = app.add_subcommand("moduli", "build a moduli space");
    add_input(moduli);
    moduli->add_option("--alpha", alpha_name)->required();
    moduli->add_option("--gamma", gamma_name)->required();
    moduli->add_option("--max-len", max_len);

    auto* trace = app.add_subcommand("trace", "run the flowline algorithm");
    add_input(trace);
    trace->add_option("--from", from, "comma-separated simplex sequence")
        ->required();
    trace->add_option("--start", start)->check(CLI::IsMember({"c", "f"}));

    auto* diff = app.add_subcommand("differential", "Morse differential");
    add_input(diff);
    diff->add_option("-p,--dim", p)->required();
    diff->add_option("--max-len", max_len);

    auto* d2 = app.add_subcommand("d2-check", "verify the squared Morse "
                                              "differential vanishes");
    add_input(d2);
    d2->add_option("--max-len", max_len);

    auto* hom = app.add_subcommand("homology", "integer homology");
    add_input(hom);
    hom->add_flag("--simplicial", simplicial,
                  "use the full simplicial chain complex");
    hom->add_option("--max-len", max_len);

    auto* dot = app.add_subcommand("export-dot", "moduli space as DOT");
    add_input(dot);
    dot->add_option("--alpha", alpha_name)->required();
    dot->add_option("--gamma", gamma_name)->required();
    dot->add_option("--max-len", max_len);

    auto* gen = app.add_subcommand("gen", "write a preset complex file");
    gen->add_option("preset", input,
                    "sphere | rp2 | two-triangle | full-simplex | "
                    "graph-property")
        ->required();
    gen->add_option("-n", n, "dimension / vertex count");
    gen->add_option("--property", property, "graph property tag");
    gen->add_option("-o,--output", output, "output file (default stdout)");
    gen->add_option("--seed", seed, "random field seed (0 = no field)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            dmt::LoadedComplex lc;
            if (input == "sphere" || input == "rp2" ||
                input == "two-triangle") {
                lc = resolve_input(input);
            } else if (input == "full-simplex") {
                lc.complex = dmt::gen_full_simplex(n);
            } else if (input == "graph-property") {
                lc.complex = dmt::gen_graph_property_complex(
                    n, parse_property(property));
            } else {
                throw dmt::ParseError("unknown preset '" + input + "'", 0, 0);
            }
            if (seed != 0 && !lc.field)
                lc.field = dmt::random_gradient_field(lc.complex, seed);
            if (output.empty()) {
                dmt::save_complex(lc, std::cout);
            } else {
                std::ofstream os(output);
                dmt::save_complex(lc, os);
            }
            return 0;
        }

        dmt::LoadedComplex lc = resolve_input(input);
        dmt::DiscreteVectorField V = lc.effective_field();

        if (*validate) {
            auto rep = dmt::validate_field(V, lc.complex);
            if (!rep.ok) {
                for (const auto& v : rep.violations)
                    std::cout << "violation: " << v << '\n';
                return 1;
            }
            auto grad = dmt::is_gradient(V, lc.complex);
            std::cout << "field valid, " << V.size() << " pairs, "
                      << (grad.ok ? "gradient" : "not gradient") << '\n';
            if (!grad.ok) {
                std::cout << "closed V-path:";
                for (const auto& s : grad.witness)
                    std::cout << ' ' << s.name();
                std::cout << '\n';
                return 1;
            }
            return 0;
        }

        auto H = dmt::build_modified_hasse(lc.complex, V);

        if (*critical) {
            int lo = p_given ? p : 0;
            int hi = p_given ? p : lc.complex.top_dimension();
            for (int d = lo; d <= hi; ++d)
                for (const auto& s :
                     dmt::critical_simplices(lc.complex, V, d))
                    std::cout << s.name() << '\n';
            return 0;
        }
        if (*flow) {
            dmt::Simplex a = dmt::parse_simplex(alpha_name);
            dmt::Simplex g = dmt::parse_simplex(gamma_name);
            auto lines =
                a.dim() == g.dim() + 1
                    ? dmt::enumerate_flowlines_index1(a, g, H, max_len)
                    : dmt::enumerate_flowlines_index2(a, g, H, max_len);
            for (const auto& F : lines)
                std::cout << (dmt::path_sign(F) > 0 ? "+1" : "-1") << '\t'
                          << F.name() << '\n';
            return 0;
        }
        if (*moduli) {
            auto M = dmt::build_moduli(dmt::parse_simplex(alpha_name),
                                       dmt::parse_simplex(gamma_name), H,
                                       max_len);
            auto comps = dmt::components(M);
            std::cout << M.flowlines.size() << " flowlines, " << comps.size()
                      << (comps.size() == 1 ? " component" : " components")
                      << ", " << dmt::boundary(M).size()
                      << " boundary flowlines\n";
            for (const auto& c : comps) {
                std::cout << (c.kind == dmt::Component::Kind::cycle
                                  ? "cycle"
                                  : "path")
                          << " with " << c.members.size() << " flowlines\n";
                for (std::size_t i : c.members)
                    std::cout << "  " << M.flowlines[i].name() << '\n';
            }
            return 0;
        }
        if (*trace) {
            dmt::Path F = parse_flowline(from, H);
            auto out = dmt::alg_list(
                F, start == "c" ? dmt::Label::c : dmt::Label::f, H);
            print_trace(out, std::cout);
            return 0;
        }
        if (*diff) {
            print_matrix(
                dmt::morse_differential(lc.complex, V, H, p, max_len),
                std::cout);
            return 0;
        }
        if (*d2) {
            std::vector<dmt::DifferentialMatrix> diffs;
            for (int q = 1; q <= lc.complex.top_dimension(); ++q)
                diffs.push_back(
                    dmt::morse_differential(lc.complex, V, H, q, max_len));
            for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
                auto rep = dmt::verify_d_squared(diffs[k + 1], diffs[k]);
                if (!rep.ok) {
                    std::cout << "d^2 != 0: <dd(" << rep.alpha << "), "
                              << rep.gamma << "> = " << rep.value << '\n';
                    return 1;
                }
            }
            std::cout << "d^2 = 0\n";
            return 0;
        }
        if (*hom) {
            auto result = simplicial
                              ? dmt::simplicial_homology_oracle(lc.complex)
                              : dmt::morse_homology(lc.complex, V, H,
                                                    max_len);
            std::cout << result.report();
            return 0;
        }
        if (*dot) {
            auto M = dmt::build_moduli(dmt::parse_simplex(alpha_name),
                                       dmt::parse_simplex(gamma_name), H,
                                       max_len);
            dmt::export_dot(M, std::cout);
            return 0;
        }
    } catch (const dmt::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const dmt::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
