#include "toric/json_io.hpp"

namespace toric {

json to_json(const Int& x) { return x.str(); }

json to_json(const IntVector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i].str());
    return a;
}

json to_json(const IntMatrix& m) {
    json a = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(to_json(IntVector(m.row(i).transpose())));
    return a;
}

json to_json(const RatVector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v[i]));
    return a;
}

json to_json(const RatPolytope& p) {
    json hs = json::array(), vs = json::array();
    for (const auto& h : p.halfspaces) hs.push_back({{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
    for (const auto& v : p.vertices) vs.push_back(to_json(v));
    return {{"halfspaces", hs}, {"vertices", vs}};
}

namespace {

json one_based(const IndexSet& s) {
    json a = json::array();
    for (int i : s) a.push_back(i + 1);
    return a;
}

json int_list(const std::vector<Int>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.str());
    return a;
}

}  // namespace

json to_json(const MonomialIdeal& ideal) {
    json a = json::array();
    for (const auto& g : ideal.generators) a.push_back(one_based(g));
    return a;
}

json to_json(const ClassGroupData& cg) {
    return {{"free_rank", std::to_string(cg.free_rank)},
            {"invariant_factors", int_list(cg.invariant_factors)},
            {"weight_matrix", to_json(cg.weight_matrix)},
            {"torsion_matrix", to_json(cg.torsion_matrix)},
            {"torsion_moduli", int_list(cg.torsion_moduli)}};
}

json to_json(const MirrorModel& m) {
    json blocks = json::array(), exps = json::array(), degs = json::array(), origin = json::array();
    for (const auto& b : m.dual_blocks) blocks.push_back(to_json(b));
    for (const auto& e : m.exponent_matrices) exps.push_back(to_json(e));
    for (const auto& d : m.degrees) degs.push_back(to_json(d));
    for (int o : m.block_origin) origin.push_back(o < 0 ? json(nullptr) : json(o + 1));
    return {{"dual_fan_matrix", to_json(m.dual_fan_matrix)},
            {"dual_blocks", blocks},
            {"block_origin", origin},
            {"exponent_matrices", exps},
            {"irrelevant_ideal", to_json(m.irrelevant_ideal)},
            {"class_group", to_json(m.class_group)},
            {"degrees", degs},
            {"polynomials", render_family(m)}};
}

json to_json(const AdmissibleW& w) {
    json c = json::array();
    for (const auto& b : w.c_blocks) c.push_back(to_json(b));
    return {{"columns", one_based(w.columns)},
            {"q", to_json(w.q)},
            {"torsion", int_list(w.torsion)},
            {"aug_det", w.aug_det.str()},
            {"c_blocks", c},
            {"passes_C", w.passes_C}};
}

IndexSet parse_one_based(const json& j) {
    IndexSet s;
    for (const auto& x : j) s.push_back(x.get<int>() - 1);
    std::sort(s.begin(), s.end());
    return s;
}

Int parse_int(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw Error("not an integer: \"" + s + "\"");
        return Int(s);
    }
    throw Error("expected an integer, got " + j.dump());
}

IntVector parse_vector(const json& j) {
    if (!j.is_array()) throw Error("expected an array");
    IntVector v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v[i] = parse_int(j[i]);
    return v;
}

IntMatrix parse_matrix(const json& j) {
    if (!j.is_array() || j.empty()) throw Error("expected a nonempty array of rows");
    IntMatrix m(j.size(), j[0].size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j[0].size()) throw Error("ragged matrix");
        for (size_t k = 0; k < j[i].size(); ++k) m(i, k) = parse_int(j[i][k]);
    }
    return m;
}

PartitionedFtv parse_ftv(const json& j) {
    if (!j.is_object() || !j.contains("fan_matrix") || !j.contains("blocks"))
        throw Error("input needs \"fan_matrix\" and \"blocks\"");
    PartitionedFtv x;
    x.fan_matrix = parse_matrix(j.at("fan_matrix"));
    for (const auto& b : j.at("blocks")) x.blocks.push_back(parse_vector(b));
    x.validate();
    return x;
}

std::string subset_key(const IndexSet& a) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i] + 1);
    return s;
}

}  // namespace toric
