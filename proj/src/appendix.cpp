#include "toric/appendix.hpp"

#include "toric/json_io.hpp"
#include "toric/scenarios.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

namespace toric {

bool ReplayResult::pass() const {
    return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const ReplayEntry& e) { return e.pass; });
}

std::string fixture_dir() {
    if (const char* env = std::getenv("MIRRORWEB_FIXTURES")) return env;
    return TORIC_FIXTURE_DIR;
}

PolynomialSet polynomial_set(const std::vector<IntMatrix>& exps) {
    PolynomialSet out;
    for (const auto& m : exps) {
        std::vector<std::vector<std::string>> poly;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::vector<std::string> col;
            for (Eigen::Index i = 0; i < m.rows(); ++i) col.push_back(m(i, c).str());
            poly.push_back(std::move(col));
        }
        std::sort(poly.begin(), poly.end());
        out.push_back(std::move(poly));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolynomialSet polynomial_set(const std::vector<std::vector<std::vector<long>>>& polys) {
    std::vector<IntMatrix> exps;
    for (const auto& p : polys) {
        std::vector<IntVector> cols;
        for (const auto& c : p) cols.push_back(int_vector(c));
        exps.push_back(from_columns(cols));
    }
    return polynomial_set(exps);
}

namespace {

json load(const std::string& dir, const std::string& file) {
    std::ifstream in(dir + "/" + file);
    if (!in) throw Error("cannot open fixture " + dir + "/" + file);
    return json::parse(in);
}

PolynomialSet fixture_polynomials(const json& polys) {
    PolynomialSet out;
    for (const auto& p : polys) {
        std::vector<std::vector<std::string>> poly;
        for (const auto& mono : p) poly.push_back(mono.get<std::vector<std::string>>());
        std::sort(poly.begin(), poly.end());
        out.push_back(std::move(poly));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<IndexSet> fixture_ideal(const json& gens) {
    std::set<IndexSet> out;
    for (const auto& g : gens) out.insert(parse_one_based(g));
    return out;
}

std::string describe(const std::vector<std::string>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + ")";
}

// First element present on one side only.
std::string poly_mismatch(const PolynomialSet& got, const PolynomialSet& want) {
    if (got.size() != want.size()) return "polynomial count " + std::to_string(got.size()) + " != " + std::to_string(want.size());
    for (size_t k = 0; k < got.size(); ++k) {
        if (got[k] == want[k]) continue;
        for (const auto& m : want[k])
            if (std::find(got[k].begin(), got[k].end(), m) == got[k].end()) return "missing monomial " + describe(m);
        for (const auto& m : got[k])
            if (std::find(want[k].begin(), want[k].end(), m) == want[k].end()) return "unexpected monomial " + describe(m);
        return "monomial multiplicities differ";
    }
    return {};
}

std::string ideal_mismatch(const MonomialIdeal& got, const std::set<IndexSet>& want) {
    std::set<IndexSet> g(got.generators.begin(), got.generators.end());
    for (const auto& w : want)
        if (!g.count(w)) return "missing ideal generator " + json(subset_key(w)).dump();
    for (const auto& x : g)
        if (!want.count(x)) return "unexpected ideal generator " + json(subset_key(x)).dump();
    return {};
}

struct WebFixture {
    Scenario scenario;
    MirrorModel bb;
    AdmissibleW w;
    MirrorWeb web;
};

WebFixture web_for(const std::string& name) {
    WebFixture f;
    f.scenario = make_scenario(name);
    f.bb = f_dual(f.scenario.input);
    f.w = scenario_w(f.scenario, f.bb);
    f.web = build_web(f.scenario.input, f.bb, f.w, {});
    return f;
}

// Shared per-entry check: polynomials, ideal, and the shape of Λ^A / b^A.
ReplayEntry check_entry(MirrorWeb& web, const IndexSet& a, const json& e) {
    ReplayEntry r;
    r.label = "A={" + subset_key(a) + "}";
    const MirrorModel& m = web.model(a);
    const Eigen::Index n = web.bb.dual_fan_matrix.rows();
    std::string why;
    if (m.dual_fan_matrix != drop_columns(web.bb.dual_fan_matrix, a)) why = "fan matrix is not Λ with columns A removed";
    if (why.empty() && m.class_group.free_rank != m.dual_fan_matrix.cols() - n) why = "class group rank";
    if (why.empty()) why = poly_mismatch(polynomial_set(m.exponent_matrices), fixture_polynomials(e.at("polynomial_exponents")));
    if (why.empty()) why = ideal_mismatch(m.irrelevant_ideal, fixture_ideal(e.at("irrelevant_ideal")));
    if (why.empty() && e.contains("framing_tail")) {
        auto tail = e.at("framing_tail").get<std::vector<std::string>>();
        const IntVector& last = m.dual_blocks.back();
        if (tail.size() > static_cast<size_t>(last.size())) {
            why = "framing tail longer than the framing";
        } else {
            for (size_t i = 0; i < tail.size() && why.empty(); ++i)
                if (last[last.size() - tail.size() + i].str() != tail[i]) why = "framing tail differs at entry " + std::to_string(i + 1);
        }
    }
    r.pass = why.empty();
    r.detail = why;
    return r;
}

}  // namespace

ReplayResult replay_appendix_a(const std::string& dir) {
    json fx = load(dir, "appendix_a.json");
    WebFixture f = web_for(fx.at("ambient").get<std::string>());
    ReplayResult res;
    // The two ends of the web against the BB and LT polynomials of the Y_{2,2} worked example.
    {
        ReplayEntry r{"A={} (BB)", false, {}};
        PolynomialSet want = polynomial_set(std::vector<std::vector<std::vector<long>>>{
            {{1, 1, 1, 1, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 2, 0, 0}, {2, 0, 0, 0, 2, 0, 0, 0}},
            {{0, 0, 0, 2, 0, 0, 0, 2}, {0, 0, 0, 0, 1, 1, 1, 1}, {0, 0, 2, 0, 0, 0, 2, 0}}});
        r.detail = poly_mismatch(polynomial_set(f.web.model({}).exponent_matrices), want);
        r.pass = r.detail.empty();
        res.entries.push_back(r);
    }
    {
        ReplayEntry r{"A={" + subset_key(f.web.iw) + "} (LT)", false, {}};
        PolynomialSet want = polynomial_set(std::vector<std::vector<std::vector<long>>>{
            {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 1}}, {{1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}});
        const MirrorModel& lt = f.web.model(f.web.iw);
        r.detail = poly_mismatch(polynomial_set(lt.exponent_matrices), want);
        if (r.detail.empty() && !same_columns(lt.dual_fan_matrix, f.w.w)) r.detail = "LT fan matrix differs from W";
        r.pass = r.detail.empty();
        res.entries.push_back(r);
    }
    for (const auto& e : fx.at("entries")) res.entries.push_back(check_entry(f.web, parse_one_based(e.at("A")), e));
    return res;
}

ReplayResult replay_appendix_b(const std::string& dir) {
    json fx = load(dir, "appendix_b.json");
    const auto& rows = fx.at("rows");
    std::vector<IntVector> want;
    for (size_t c = 0; c < rows[0].size(); ++c) {
        IntVector v(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) v[i] = parse_int(rows[i][c]);
        want.push_back(v);
    }
    IntMatrix got = mpcp_rays(generate_dd_input(3).lambda);
    ReplayEntry r{"MPCP rays of the Y_{3,3} BB polytope", false, {}};
    IntMatrix w = from_columns(want);
    if (got.cols() != w.cols()) {
        r.detail = std::to_string(got.cols()) + " columns, expected " + std::to_string(w.cols());
    } else if (!same_columns(got, w)) {
        for (const auto& v : want) {
            bool found = false;
            for (Eigen::Index j = 0; j < got.cols() && !found; ++j) found = got.col(j) == v;
            if (!found) { r.detail = "missing column " + to_string(v); break; }
        }
        if (r.detail.empty()) r.detail = "column multisets differ";
    }
    r.pass = r.detail.empty();
    return {{r}};
}

ReplayResult replay_appendix_c(const std::string& dir) {
    json fx = load(dir, "appendix_c.json");
    WebFixture f = web_for(fx.at("ambient").get<std::string>());
    ReplayResult res;
    for (const auto& e : fx.at("entries")) res.entries.push_back(check_entry(f.web, parse_one_based(e.at("A")), e));
    return res;
}

ReplayResult replay_appendix(char which, const std::string& dir) {
    switch (which) {
        case 'A': return replay_appendix_a(dir);
        case 'B': return replay_appendix_b(dir);
        case 'C': return replay_appendix_c(dir);
    }
    throw Error(std::string("unknown appendix ") + which);
}

}  // namespace toric
