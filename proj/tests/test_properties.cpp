#include "properties.hpp"

#include <doctest.h>

// Smaller runs than the acceptance runner, with different seeds.

TEST_CASE("gale dual is orthogonal and saturated") {
    auto o = props::gale_orthogonality(60, 11);
    INFO(o.detail);
    CHECK(o.ok);
}

TEST_CASE("hnf and snf re-multiply") {
    auto o = props::hnf_snf_identities(60, 12);
    INFO(o.detail);
    CHECK(o.ok);
}

TEST_CASE("hull vertices are exactly the LP-extreme points") {
    auto o = props::hull_extremality(30, 13);
    INFO(o.detail);
    CHECK(o.ok);
}

TEST_CASE("unstable components are the minimal hitting sets") {
    auto o = props::unstable_components_vs_hitting_sets(60, 14);
    INFO(o.detail);
    CHECK(o.ok);
}

TEST_CASE("hull of the vertices is the same polytope") {
    auto o = props::hull_round_trip(30, 15);
    INFO(o.detail);
    CHECK(o.ok);
}
