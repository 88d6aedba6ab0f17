#include <catch2/catch_amalgamated.hpp>

#include "dmt/path.hpp"
#include "dmt/presets.hpp"

using namespace dmt;

namespace {

ModifiedHasseDiagram triangle_diagram() {
    return build_modified_hasse(gen_full_simplex(2), DiscreteVectorField{});
}

ModifiedHasseDiagram sphere_diagram() {
    auto [K, V] = gen_sphere_preset();
    return build_modified_hasse(K, V);
}

}  // namespace

TEST_CASE("make_path derives traversal flags") {
    auto H = sphere_diagram();
    // F0 = 123 -> 12 -> 124 -> 14 -> 4: the up-step rides the Morse arrow
    auto F0 = make_path({Simplex{1, 2, 3}, Simplex{1, 2}, Simplex{1, 2, 4},
                         Simplex{1, 4}, Simplex{4}},
                        H);
    CHECK(F0.length() == 4);
    CHECK(F0.index() == 2);
    CHECK(F0.is_legal());
    CHECK(F0.backward == std::vector<bool>{false, false, false, false});
    // walking down a matched arrow is backward
    auto P = make_path({Simplex{1, 2, 4}, Simplex{1, 2}}, H);
    CHECK(P.backward == std::vector<bool>{true});
    CHECK_FALSE(P.is_legal());
    CHECK(P.is_illegal());
    CHECK_THROWS_AS(make_path({Simplex{1, 2}, Simplex{3, 4}}, H),
                    MalformedPathError);
}

TEST_CASE("length-index parity") {
    auto H = sphere_diagram();
    auto F0 = make_path({Simplex{1, 2, 3}, Simplex{1, 2}, Simplex{1, 2, 4},
                         Simplex{1, 4}, Simplex{4}},
                        H);
    CHECK((F0.length() - F0.index()) % 2 == 0);
    auto Q = make_path({Simplex{1, 2, 3}, Simplex{1, 2}}, H);
    CHECK((Q.length() - Q.index()) % 2 == 0);
}

TEST_CASE("path_sign") {
    auto H = triangle_diagram();
    SECTION("single step equals the arrow sign") {
        auto P = make_path({Simplex{1, 2, 3}, Simplex{1, 3}}, H);
        CHECK(path_sign(P) == -1);
    }
    SECTION("double drops through 12 and 13 have opposite signs") {
        auto P = make_path({Simplex{1, 2, 3}, Simplex{1, 2}, Simplex{1}}, H);
        auto Q = make_path({Simplex{1, 2, 3}, Simplex{1, 3}, Simplex{1}}, H);
        CHECK(path_sign(P) == -1);
        CHECK(path_sign(Q) == 1);
    }
}

TEST_CASE("compose") {
    auto H = triangle_diagram();
    auto P1 = make_path({Simplex{1, 2, 3}, Simplex{1, 2}}, H);
    auto P2 = make_path({Simplex{1, 2}, Simplex{1}}, H);
    auto P = compose(P1, P2);
    CHECK(P.nodes ==
          std::vector<Simplex>{{1, 2, 3}, {1, 2}, {1}});
    CHECK(path_sign(P) == path_sign(P1) * path_sign(P2));
    CHECK(path_sign(P) == -1);
    auto P3 = make_path({Simplex{1, 3}, Simplex{1}}, H);
    CHECK_THROWS_AS(compose(P1, P3), EndpointMismatchError);
}

TEST_CASE("find_double_drop") {
    auto Hs = sphere_diagram();
    auto F0 = make_path({Simplex{1, 2, 3}, Simplex{1, 2}, Simplex{1, 2, 4},
                         Simplex{1, 4}, Simplex{4}},
                        Hs);
    CHECK(find_double_drop(F0) == 2);
    CHECK(intermediate_simplex(F0) == Simplex{1, 4});

    auto Ht = triangle_diagram();
    auto D = make_path({Simplex{1, 2, 3}, Simplex{1, 2}, Simplex{1}}, Ht);
    CHECK(find_double_drop(D) == 0);
    CHECK(intermediate_simplex(D) == Simplex{1, 2});

    auto index1 = make_path({Simplex{1, 2, 3}, Simplex{1, 2}}, Ht);
    CHECK_THROWS_AS(find_double_drop(index1), MalformedPathError);
}

TEST_CASE("flowline recognition") {
    auto H = sphere_diagram();
    auto F0 = make_path({Simplex{1, 2, 3}, Simplex{1, 2}, Simplex{1, 2, 4},
                         Simplex{1, 4}, Simplex{4}},
                        H);
    CHECK(is_flowline(F0, H));
    CHECK_FALSE(is_critical_flowline(F0, H));  // 14 is paired
    // noncritical endpoint
    auto P = make_path({Simplex{1, 2, 4}, Simplex{1, 2}, Simplex{1}}, H);
    CHECK_FALSE(is_flowline(P, H));
}
