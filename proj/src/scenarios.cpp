#include "toric/scenarios.hpp"

namespace toric {

std::vector<IntVector> normal_form_blocks(const std::vector<std::pair<int, int>>& shape) {
    int total = 0;
    for (auto [m, d] : shape) total += m;
    std::vector<IntVector> out;
    int at = 0;
    for (auto [m, d] : shape) {
        IntVector a = IntVector::Zero(total);
        for (int i = 0; i < m; ++i) a[at + i] = 1;
        a[at + m - 1] = d;
        at += m;
        out.push_back(a);
    }
    return out;
}

namespace {

IndexSet zero_based(std::initializer_list<int> one_based) {
    IndexSet r;
    for (int i : one_based) r.push_back(i - 1);
    return r;
}

Scenario projective(const std::string& name, const std::vector<std::pair<int, int>>& shape) {
    Scenario s;
    s.name = name;
    s.input.blocks = normal_form_blocks(shape);
    s.input.fan_matrix = projective_space_fan(static_cast<int>(s.input.blocks.front().size()) - 1);
    return s;
}

}  // namespace

Scenario make_scenario(const std::string& name) {
    if (name == "y22" || name == "y33" || name.rfind("ydd:", 0) == 0) {
        int d = name == "y22" ? 2 : name == "y33" ? 3 : 0;
        if (d == 0) {
            try {
                d = std::stoi(name.substr(4));
            } catch (const std::exception&) {
                throw Error("bad scenario name " + name);
            }
        }
        DdInput dd = generate_dd_input(d);
        Scenario s;
        s.name = name;
        s.input = dd.input;
        s.w_columns = dd.w_columns;
        return s;
    }
    if (name == "y223p5") {
        Scenario s = projective(name, {{2, 1}, {2, 1}, {2, 2}});
        s.w_columns = zero_based({1, 5, 8, 12, 15, 16});
        s.c_blocks = {int_vector({1, 1, 0, 0, 0, 0}), int_vector({0, 0, 1, 1, 0, 0}), int_vector({0, 0, 0, 0, 2, 2})};
        return s;
    }
    if (name == "y223p6") {
        Scenario s = projective(name, {{2, 1}, {2, 1}, {3, 1}});
        s.w_columns = zero_based({3, 4, 12, 13, 15, 16, 21});
        return s;
    }
    if (name == "y456") {
        Scenario s = projective(name, {{3, 2}, {3, 3}, {3, 4}});
        s.w_columns = zero_based({7, 8, 9, 10, 11, 12, 22, 23, 24});
        s.c_blocks = {int_vector({2, 2, 2, 0, 0, 0, 0, 0, 0}), int_vector({0, 0, 0, 3, 3, 3, 0, 0, 0}),
                      int_vector({0, 0, 0, 0, 0, 0, 4, 4, 4})};
        return s;
    }
    throw Error("unknown scenario " + name);
}

std::vector<std::string> scenario_names() { return {"y22", "y33", "ydd:<d>", "y223p5", "y223p6", "y456"}; }

MirrorModel web_dual(const PartitionedFtv& x) {
    for (const auto& b : x.blocks)
        if (block_delta(b) > 1) return dual_skeleton(x);
    return f_dual(x);
}

AdmissibleW scenario_w(const Scenario& s, const MirrorModel& bb) {
    std::optional<AdmissibleW> a = s.c_blocks.empty()
        ? evaluate_W(s.input, bb.dual_fan_matrix, bb.dual_blocks, s.w_columns)
        : evaluate_W(s.input, bb.dual_fan_matrix, s.w_columns, s.c_blocks);
    if (!a) throw Error("scenario W fails assumption (B)");
    return *a;
}

}  // namespace toric
