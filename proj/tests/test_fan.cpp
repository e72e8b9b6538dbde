#include "oracles.hpp"
#include "toric/fan.hpp"
#include "toric/ftv.hpp"

#include <doctest.h>

using namespace toric;

TEST_CASE("fan spanned by the simplex of P^n") {
    for (int n = 1; n <= 4; ++n) {
        IntMatrix v = projective_space_fan(n);
        SpannedFan f = spanned_fan(convex_hull(v), v);
        CHECK(f.max_cones.size() == static_cast<size_t>(n + 1));
        CHECK(is_complete(f));
        MonomialIdeal ideal = irrelevant_ideal(f);
        REQUIRE(ideal.generators.size() == static_cast<size_t>(n + 1));
        auto comps = unstable_components(ideal);
        // Unstable locus of P^n is the origin: one component, all variables.
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].size() == static_cast<size_t>(n + 1));
    }
}

TEST_CASE("fan of P^1 x P^1 has two unstable components") {
    IntMatrix v = int_matrix({{1, 0, -1, 0}, {0, 1, 0, -1}});
    SpannedFan f = spanned_fan(convex_hull(v), v);
    CHECK(is_complete(f));
    auto comps = unstable_components(irrelevant_ideal(f));
    std::vector<IndexSet> want{{0, 2}, {1, 3}};
    CHECK(comps == want);
}

TEST_CASE("ray order must cover facet vertices") {
    IntMatrix v = projective_space_fan(2);
    CHECK_THROWS_AS(spanned_fan(convex_hull(v), select_columns(v, {0, 1})), Error);
}

TEST_CASE("irrelevant ideal generators match the hitting-set oracle") {
    IntMatrix v = int_matrix({{1, 0, -1, 0, 1}, {0, 1, 0, -1, 1}});
    SpannedFan f = spanned_fan(convex_hull(v), v);
    MonomialIdeal ideal = irrelevant_ideal(f);
    auto got = unstable_components(ideal);
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::minimal_transversals(5, ideal.generators));
}

TEST_CASE("minimalize removes multiples and duplicates") {
    MonomialIdeal m = minimalize({{0, 1, 2}, {1, 0}, {0, 1}, {2}});
    std::vector<IndexSet> want{{0, 1}, {2}};
    CHECK(m.generators == want);
}

TEST_CASE("weighted projective space quotients") {
    WpsTest p2 = is_fan_matrix_of_wps_quotient(projective_space_fan(2));
    CHECK(p2.accepted);
    CHECK(p2.q == int_vector({1, 1, 1}));
    CHECK(p2.torsion.empty());

    WpsTest fake = is_fan_matrix_of_wps_quotient(int_matrix({{2, -1, -1}, {-1, 2, -1}}));
    CHECK(fake.accepted);
    CHECK(fake.torsion == std::vector<Int>{3});

    WpsTest p112 = is_fan_matrix_of_wps_quotient(int_matrix({{1, -1, 0}, {0, -2, 1}}));
    CHECK(p112.accepted);
    CHECK(p112.q == int_vector({1, 1, 2}));

    // P^1 x P^1 has Picard number 2.
    CHECK_FALSE(is_fan_matrix_of_wps_quotient(int_matrix({{1, 0, -1, 0}, {0, 1, 0, -1}})).accepted);
}
