#include <catch2/catch_amalgamated.hpp>

#include "dmt/graph_property.hpp"

using namespace dmt;

TEST_CASE("2-edge-colourability complex of K_3") {
    auto K = gen_graph_property_complex(3, prop_k_edge_colourable(2));
    // all three single edges; all three 2-edge subgraphs; not the triangle
    CHECK(K.f_vector() == std::vector<std::size_t>{3, 3});
}

TEST_CASE("at-most-one-edge complex of K_3 is three isolated points") {
    auto K = gen_graph_property_complex(3, prop_max_edges(1));
    CHECK(K.f_vector() == std::vector<std::size_t>{3});
}

TEST_CASE("matching complex of K_4") {
    auto K = gen_graph_property_complex(4, prop_max_degree(1));
    // 6 single edges; 3 perfect matchings; nothing larger
    CHECK(K.f_vector() == std::vector<std::size_t>{6, 3});
}

TEST_CASE("generated complexes are face-closed") {
    for (const auto& K :
         {gen_graph_property_complex(4, prop_k_edge_colourable(2)),
          gen_graph_property_complex(5, prop_max_degree(1)),
          gen_graph_property_complex(4, prop_max_edges(3))}) {
        for (const Simplex& s : K.all_simplices())
            for (const Simplex& f : facets(s)) CHECK(K.contains(f));
    }
}

TEST_CASE("non-monotone predicate is rejected") {
    GraphProperty bogus{"at-least-two-or-none",
                        [](int, const std::vector<Edge>& edges) {
                            return edges.size() != 1;
                        }};
    CHECK_THROWS_AS(gen_graph_property_complex(3, bogus),
                    PropertyViolationError);
}

TEST_CASE("edge colourability backtracker") {
    auto k3 = complete_graph_edges(3);
    CHECK(edge_colourable(3, k3));
    CHECK_FALSE(edge_colourable(2, k3));
    CHECK(edge_colourable(1, {{0, 1}}));
    CHECK_FALSE(edge_colourable(1, {{0, 1}, {1, 2}}));
}
