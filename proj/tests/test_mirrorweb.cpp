#include "toric/appendix.hpp"
#include "toric/scenarios.hpp"

#include <doctest.h>

#include <numeric>

using namespace toric;

namespace {

IndexSet complement(const IndexSet& w, int total) {
    IndexSet out;
    for (int j = 0; j < total; ++j)
        if (!std::binary_search(w.begin(), w.end(), j)) out.push_back(j);
    return out;
}

}  // namespace

TEST_CASE("block shape screen") {
    PartitionedFtv x{projective_space_fan(5), normal_form_blocks({{2, 1}, {2, 1}, {2, 2}})};
    auto checks = check_assumption_A(x);
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].pass);
    CHECK(checks[1].pass);
    CHECK_FALSE(checks[2].pass);
    CHECK(checks[2].delta == 2);
    PartitionedFtv bad{projective_space_fan(2), {int_vector({2, 1, 1})}};
    CHECK_THROWS_AS(check_assumption_A(bad), Error);
}

TEST_CASE("minor sign screen") {
    CHECK(passes_assumption_B(projective_space_fan(3)));
    CHECK(passes_assumption_B(int_matrix({{2, 0, -1, -1}, {0, 2, -1, -1}, {-1, -1, 2, 0}})));
    CHECK_FALSE(passes_assumption_B(int_matrix({{1, 0, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, 1}})));
    CHECK_FALSE(passes_assumption_B(int_matrix({{1, 0}, {0, 1}})));
}

TEST_CASE("web of the quadric pair has one model per subset of the exceptional columns") {
    Scenario s = make_scenario("y22");
    MirrorModel bb = web_dual(s.input);
    AdmissibleW w = scenario_w(s, bb);
    CHECK(w.passes_C);
    IndexSet iw = complement(w.columns, static_cast<int>(bb.dual_fan_matrix.cols()));
    CHECK(iw.size() == 4);
    MirrorWeb web = build_web(s.input, bb, w, all_subsets(iw), 2);
    CHECK(web.models.size() == 16);
    CHECK(web_invariants({w}, iw).model_count == 16);
    // The empty subset is the calibrated dual itself, the full one the quotient side.
    CHECK(web.models.at({}).dual_fan_matrix == bb.dual_fan_matrix);
    const MirrorModel& lt = web.models.at(iw);
    CHECK(lt.dual_fan_matrix == w.w);
    CHECK(polynomial_set(lt.exponent_matrices) == polynomial_set(model_from(w.w, w.c_blocks).exponent_matrices));
}

TEST_CASE("lazy web models are built on request") {
    Scenario s = make_scenario("y33");
    MirrorModel bb = web_dual(s.input);
    MirrorWeb web = build_web(s.input, bb, scenario_w(s, bb), {});
    CHECK(web.models.empty());
    const MirrorModel& m = web.model({web.iw.front()});
    CHECK(m.dual_fan_matrix.cols() == bb.dual_fan_matrix.cols() - 1);
    CHECK(web.models.size() == 1);
    CHECK_THROWS_AS(web.model({s.w_columns.front()}), Error);
}

TEST_CASE("subset enumeration is guarded by size") {
    IndexSet big(21);
    std::iota(big.begin(), big.end(), 0);
    CHECK_THROWS_AS(all_subsets(big), SizeGuard);
    auto small = all_subsets({3, 5});
    std::vector<IndexSet> want{{}, {3}, {5}, {3, 5}};
    CHECK(small == want);
}

TEST_CASE("admissible-W search does not depend on the number of workers") {
    Scenario s = make_scenario("y33");
    MirrorModel bb = web_dual(s.input);
    auto one = find_admissible_W(s.input, bb.dual_fan_matrix, bb.dual_blocks, 1);
    auto four = find_admissible_W(s.input, bb.dual_fan_matrix, bb.dual_blocks, 4);
    REQUIRE(one.size() == four.size());
    CHECK_FALSE(one.empty());
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].columns == four[i].columns);
        CHECK(one[i].passes_C == four[i].passes_C);
        CHECK(one[i].aug_det == four[i].aug_det);
    }
    bool found = false;
    for (const auto& a : one) found = found || (a.columns == s.w_columns && a.passes_C);
    CHECK(found);
}

TEST_CASE("restricting the dual framing to W gives the stated LT framing") {
    Scenario s = make_scenario("y456");
    MirrorModel bb = web_dual(s.input);
    for (size_t k = 0; k < bb.dual_blocks.size(); ++k)
        CHECK(select_entries(bb.dual_blocks[k], s.w_columns) == s.c_blocks[k]);
}

TEST_CASE("framing of the wrong partition shape fails the partner check") {
    Scenario s = make_scenario("y22");
    MirrorModel bb = web_dual(s.input);
    IntMatrix w = select_columns(bb.dual_fan_matrix, s.w_columns);
    CHECK(passes_assumption_C(s.input, w, {int_vector({1, 1, 0, 0}), int_vector({0, 0, 1, 1})}));
    CHECK_FALSE(passes_assumption_C(s.input, w, {int_vector({1, 1, 1, 0}), int_vector({0, 0, 0, 1})}));
}

TEST_CASE("resolution rays of projective space are its own rays") {
    CHECK(same_columns(mpcp_rays(projective_space_fan(3)), projective_space_fan(3)));
}
