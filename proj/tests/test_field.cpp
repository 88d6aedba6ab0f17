#include <catch2/catch_amalgamated.hpp>

#include "dmt/field.hpp"
#include "dmt/presets.hpp"
#include "dmt/random_field.hpp"

using namespace dmt;

TEST_CASE("canonical Morse function induces the empty field") {
    for (const auto& K :
         {gen_full_simplex(3), gen_two_triangle_complex(),
          gen_sphere_preset().first}) {
        auto V = field_from_morse(canonical_morse_function(K), K);
        CHECK(V.size() == 0);
        for (const Simplex& s : K.all_simplices()) CHECK(V.is_critical(s));
    }
}

TEST_CASE("two-triangle Morse values induce five pairs, one critical") {
    auto K = gen_two_triangle_complex();
    auto V = field_from_morse(gen_two_triangle_morse(), K);
    CHECK(V.size() == 5);
    CHECK(V.pairs() == gen_two_triangle_field().pairs());
    int criticals = 0;
    for (const Simplex& s : K.all_simplices())
        if (V.is_critical(s)) ++criticals;
    CHECK(criticals == 1);
    CHECK(V.is_critical(Simplex{4}));
}

TEST_CASE("morse function with two exceptional facets is rejected") {
    auto K = build_complex({Simplex{1, 2}});
    MorseFunction f;
    f.values[Simplex{1}] = 5;
    f.values[Simplex{2}] = 5;
    f.values[Simplex{1, 2}] = 1;  // both endpoints exceed the edge
    CHECK_THROWS_AS(field_from_morse(f, K), InvalidMorseFunctionError);
}

TEST_CASE("validate_field") {
    SECTION("sphere preset is valid") {
        auto [K, V] = gen_sphere_preset();
        CHECK(validate_field(V, K).ok);
    }
    SECTION("simplex in two pairs") {
        auto K = build_complex({Simplex{1, 2, 3}});
        DiscreteVectorField V{{{Simplex{1}, Simplex{1, 2}},
                               {Simplex{1}, Simplex{1, 3}}}};
        auto rep = validate_field(V, K);
        CHECK_FALSE(rep.ok);
        CHECK(rep.violations.size() == 1);
        CHECK(rep.violations.front().find("1") != std::string::npos);
    }
    SECTION("not a facet relation") {
        auto K = build_complex({Simplex{1, 2, 3}});
        DiscreteVectorField V{{{Simplex{1}, Simplex{2, 3}}}};
        auto rep = validate_field(V, K);
        CHECK_FALSE(rep.ok);
        CHECK(rep.violations.front().find("not a facet relation") !=
              std::string::npos);
    }
}

TEST_CASE("classify") {
    auto [K, V] = gen_sphere_preset();
    CHECK(classify(Simplex{1, 2, 3}, V) == CriticalityClass::critical);
    CHECK(classify(Simplex{1, 2}, V) == CriticalityClass::tail_of_arrow);
    CHECK(classify(Simplex{1, 2, 4}, V) == CriticalityClass::head_of_arrow);
}

TEST_CASE("critical_simplices") {
    auto [K, V] = gen_sphere_preset();
    CHECK(critical_simplices(K, V, 2) == std::vector<Simplex>{{1, 2, 3}});
    CHECK(critical_simplices(K, V, 1).empty());
    CHECK(critical_simplices(K, V, 0) == std::vector<Simplex>{{4}});
    auto T = build_complex({Simplex{1, 2, 3}});
    DiscreteVectorField empty;
    CHECK(critical_simplices(T, empty, 1) ==
          std::vector<Simplex>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("criticality classes partition the complex") {
    auto check_partition = [](const SimplicialComplex& K,
                              const DiscreteVectorField& V) {
        std::size_t criticals = 0;
        for (const Simplex& s : K.all_simplices())
            if (V.is_critical(s)) ++criticals;
        CHECK(criticals + 2 * V.size() == K.size());
    };
    auto [K1, V1] = gen_sphere_preset();
    check_partition(K1, V1);
    auto [K2, V2] = gen_rp2_preset();
    check_partition(K2, V2);
    for (unsigned seed = 1; seed <= 10; ++seed)
        check_partition(K2, random_gradient_field(K2, seed));
}

TEST_CASE("is_gradient") {
    SECTION("sphere preset is gradient") {
        auto [K, V] = gen_sphere_preset();
        CHECK(is_gradient(V, K).ok);
    }
    SECTION("rotational matching on the triangle boundary cycles") {
        auto K = build_complex(
            {Simplex{1, 2}, Simplex{2, 3}, Simplex{1, 3}});
        DiscreteVectorField V{{{Simplex{1}, Simplex{1, 2}},
                               {Simplex{2}, Simplex{2, 3}},
                               {Simplex{3}, Simplex{1, 3}}}};
        auto rep = is_gradient(V, K);
        CHECK_FALSE(rep.ok);
        // witness is a closed alternating V-path
        REQUIRE(rep.witness.size() >= 5);
        CHECK(rep.witness.front() == rep.witness.back());
    }
    SECTION("empty field is gradient") {
        CHECK(is_gradient(DiscreteVectorField{}, gen_full_simplex(3)).ok);
    }
    SECTION("random fields are gradient by construction") {
        auto [K, V] = gen_rp2_preset();
        for (unsigned seed = 1; seed <= 10; ++seed)
            CHECK(is_gradient(random_gradient_field(K, seed), K).ok);
    }
}
