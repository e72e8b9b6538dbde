#pragma once

#include "toric/mirrorweb.hpp"

#include <string>

namespace toric {

// A named input with the W column list used for its web (0-based) and, where the
// c-blocks are taken as given rather than restricted from b, those blocks.
struct Scenario {
    std::string name;
    PartitionedFtv input;
    IndexSet w_columns;
    std::vector<IntVector> c_blocks;  // empty: restrict the dual blocks to W
};

// Blocks (0..0, 1..1, δ_k, 0..0) laid out consecutively; each pair is (m_k, δ_k).
std::vector<IntVector> normal_form_blocks(const std::vector<std::pair<int, int>>& shape);

Scenario make_scenario(const std::string& name);  // y22, y33, ydd:<d>, y223p5, y223p6, y456
std::vector<std::string> scenario_names();

// Dual model used for the web: f_dual when every δ_k = 1, otherwise the pairing-rule skeleton.
MirrorModel web_dual(const PartitionedFtv& x);

// The scenario's W, evaluated against (B) and (C).
AdmissibleW scenario_w(const Scenario& s, const MirrorModel& bb);

}  // namespace toric
