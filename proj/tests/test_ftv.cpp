#include "toric/json_io.hpp"
#include "toric/scenarios.hpp"

#include <doctest.h>

using namespace toric;

TEST_CASE("projective line with one block is self-dual") {
    PartitionedFtv x{projective_space_fan(1), {int_vector({1, 1})}};
    MirrorModel m = f_dual(x);
    CHECK(same_columns(m.dual_fan_matrix, x.fan_matrix));
    REQUIRE(m.dual_blocks.size() == 1);
    CHECK(m.dual_blocks[0] == int_vector({1, 1}));
    CHECK(check_calibration(x).calibrated);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS((PartitionedFtv{projective_space_fan(2), {int_vector({1, 1, 0})}}.validate()), Error);
    CHECK_THROWS_AS((PartitionedFtv{projective_space_fan(2), {int_vector({1, 1, 1}), int_vector({0, 0, 1})}}.validate()),
                    Error);
    CHECK_THROWS_AS((PartitionedFtv{int_matrix({{2, 0, -1}, {0, 1, -1}}), {int_vector({1, 1, 1})}}.validate()), Error);
    CHECK_THROWS_AS(parse_ftv(json::parse(R"({"fan_matrix": [[1, 0, -1]]})")), Error);
}

TEST_CASE("blocks with an entry above one are outside the forward regime") {
    PartitionedFtv x{projective_space_fan(2), {int_vector({1, 2, 0}), int_vector({0, 0, 1})}};
    CHECK_THROWS_AS(f_dual(x), UnsupportedRegime);
    CHECK_NOTHROW(dual_skeleton(x));
}

TEST_CASE("pairing rule agrees with the block-origin indicator when every block is reduced") {
    for (int d = 2; d <= 4; ++d) {
        DdInput dd = generate_dd_input(d);
        MirrorModel m = f_dual(dd.input);
        auto parts = dd.input.partition();
        for (size_t k = 0; k < parts.size(); ++k)
            CHECK(pairing_block(m.dual_fan_matrix, dd.input.fan_matrix, parts[k]) == m.dual_blocks[k]);
    }
}

TEST_CASE("double dual of the quadric pair returns the input") {
    PartitionedFtv x = generate_dd_input(2).input;
    CalibrationReport r = check_calibration(x);
    CHECK(r.calibrated);
    CHECK(same_ftv(r.second, x));
}

TEST_CASE("reverse dual of a non-Gorenstein quotient") {
    DdInput dd = generate_dd_input(2);
    ReverseDual r = f_dual_reverse({dd.w, dd.c_blocks});
    CHECK(same_columns(r.fan_matrix, projective_space_fan(3)));
    CHECK_FALSE(check_calibration({dd.w, dd.c_blocks}).calibrated);
}

TEST_CASE("mirror model bookkeeping") {
    MirrorModel m = f_dual(generate_dd_input(2).input);
    REQUIRE(m.exponent_matrices.size() == 2);
    for (size_t k = 0; k < 2; ++k) {
        CHECK(m.exponent_matrices[k].rows() == m.dual_fan_matrix.cols());
        CHECK(m.monomial_points[k].size() == static_cast<size_t>(m.exponent_matrices[k].cols()));
        CHECK(m.psi_column[k] >= 0);
    }
    // Degrees of the polynomials add up to the anticanonical class.
    IntVector sum = IntVector::Zero(m.degrees.front().size());
    for (const auto& d : m.degrees) sum += d;
    CHECK(sum == m.class_group.weight_matrix * IntVector::Ones(m.dual_fan_matrix.cols()));
}

TEST_CASE("polynomial rendering") {
    IntMatrix e = int_matrix({{2, 0, 1}, {0, 2, 1}, {0, 0, 0}});
    CHECK(render_polynomial(e, 2) == "x1^2 + x2^2 + psi*x1*x2");
    CHECK(render_polynomial(IntMatrix::Zero(2, 1), -1) == "1");
}

TEST_CASE("json round trip of an input") {
    PartitionedFtv x = generate_dd_input(3).input;
    json j = {{"fan_matrix", to_json(x.fan_matrix)}, {"blocks", {to_json(x.blocks[0]), to_json(x.blocks[1])}}};
    PartitionedFtv y = parse_ftv(j);
    CHECK(y.fan_matrix == x.fan_matrix);
    CHECK(y.blocks == x.blocks);
    CHECK(subset_key({0, 6, 7}) == "1,7,8");
}

TEST_CASE("skeleton fan matrix columns are primitive") {
    MirrorModel m = dual_skeleton(make_scenario("y223p5").input);
    for (const auto& c : columns(m.dual_fan_matrix)) CHECK(is_primitive(c));
}
