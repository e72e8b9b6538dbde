// mirrorweb: f-duals, mirror webs and appendix replays from the command line.
//
// exit codes: 0 ok, 1 verification/computation failure, 2 bad input,
//             3 unsupported dual-framing regime, 4 size guard.

#include "toric/appendix.hpp"
#include "toric/json_io.hpp"
#include "toric/scenarios.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace toric;

namespace {

struct InputError : Error {
    using Error::Error;
};

PartitionedFtv load_input(const std::string& scenario, const std::string& file) {
    if (!scenario.empty() && !file.empty()) throw InputError("give either --scenario or --input, not both");
    if (!scenario.empty()) {
        try {
            return make_scenario(scenario).input;
        } catch (const Error& e) {
            throw InputError(e.what());
        }
    }
    if (file.empty()) throw InputError("one of --scenario or --input is required");
    std::ifstream in(file);
    if (!in) throw InputError("cannot open " + file);
    try {
        return parse_ftv(json::parse(in));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

// "all", "none", or ';'-separated 1-based comma lists ("-" is the empty set).
std::vector<IndexSet> parse_subsets(const std::string& spec, const IndexSet& iw) {
    if (spec == "none") return {};
    if (spec == "all") return all_subsets(iw);
    std::vector<IndexSet> out;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) {
        IndexSet a;
        if (part != "-" && !part.empty()) {
            std::stringstream ps(part);
            std::string tok;
            while (std::getline(ps, tok, ',')) {
                try {
                    size_t used = 0;
                    int v = std::stoi(tok, &used);
                    if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
                    a.push_back(v - 1);
                } catch (const std::exception&) {
                    throw InputError("bad subset entry '" + tok + "'");
                }
            }
        }
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        out.push_back(std::move(a));
    }
    return out;
}

void print_matrix(std::ostream& os, const IntMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << "  ";
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
        os << "\n";
    }
}

void print_model_text(std::ostream& os, const MirrorModel& m) {
    os << "dual fan matrix (" << m.dual_fan_matrix.rows() << "x" << m.dual_fan_matrix.cols() << "):\n";
    print_matrix(os, m.dual_fan_matrix);
    for (size_t k = 0; k < m.dual_blocks.size(); ++k) os << "b" << k + 1 << " = " << to_string(m.dual_blocks[k]) << "\n";
    auto polys = render_family(m);
    for (size_t k = 0; k < polys.size(); ++k) os << "p" << k + 1 << " = " << polys[k] << "\n";
    os << "class group: Z^" << m.class_group.free_rank;
    for (const auto& d : m.class_group.invariant_factors) os << " + Z/" << d.str();
    os << "\nirrelevant ideal: " << m.irrelevant_ideal.generators.size() << " generators\n";
}

int cmd_dual(const std::string& scenario, const std::string& file, const std::string& format) {
    PartitionedFtv x = load_input(scenario, file);
    MirrorModel m = f_dual(x);
    if (format == "text")
        print_model_text(std::cout, m);
    else
        std::cout << to_json(m).dump(2) << "\n";
    return 0;
}

json one_based(const IndexSet& s) {
    json a = json::array();
    for (int i : s) a.push_back(i + 1);
    return a;
}

int cmd_web(const std::string& name, const std::string& subsets, bool find_w, int jobs, const std::string& format) {
    Scenario s;
    try {
        s = make_scenario(name);
    } catch (const Error& e) {
        throw InputError(e.what());
    }
    if (subsets == "all") {
        // Fail fast: the size of I^W is known from the vertex count of Δ alone.
        const size_t lambda_cols = dual_polytope(s.input).vertices.size();
        const size_t w_cols = static_cast<size_t>(s.input.fan_matrix.cols());
        if (lambda_cols > w_cols + 20)
            throw SizeGuard("I^W has " + std::to_string(lambda_cols - w_cols) +
                            " elements; request explicit subsets (lazy mode)");
    }
    MirrorModel bb = web_dual(s.input);
    AdmissibleW w = scenario_w(s, bb);
    IndexSet iw;
    for (int j = 0; j < bb.dual_fan_matrix.cols(); ++j)
        if (!std::binary_search(w.columns.begin(), w.columns.end(), j)) iw.push_back(j);
    auto chosen = parse_subsets(subsets, iw);

    std::vector<AdmissibleW> admissible;
    if (find_w) admissible = find_admissible_W(s.input, bb.dual_fan_matrix, bb.dual_blocks, jobs);
    MirrorWeb web = build_web(s.input, bb, w, chosen, jobs);

    json out;
    out["scenario"] = name;
    out["bb"] = to_json(bb);
    out["w"] = to_json(w);
    out["complement"] = one_based(iw);
    out["model_count"] = (Int(1) << iw.size()).str();
    json models = json::object();
    for (const auto& [a, m] : web.models) models[subset_key(a)] = to_json(m);
    out["models"] = models;
    if (find_w) {
        json lists = json::array();
        for (const auto& a : admissible)
            if (a.passes_C) lists.push_back(to_json(a));
        out["admissible"] = lists;
        out["assumption_B_count"] = admissible.size();
        WebInvariants inv = web_invariants(admissible, iw);
        json dets = json::object();
        for (const auto& [d, c] : inv.aug_det_multiset) dets[d.str()] = c;
        out["aug_det_multiset"] = dets;
    }

    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "scenario " << name << ": Lambda " << bb.dual_fan_matrix.rows() << "x" << bb.dual_fan_matrix.cols()
              << ", W columns " << one_based(w.columns).dump() << ", q = " << to_string(w.q) << ", aug det "
              << w.aug_det.str() << ", (C) " << (w.passes_C ? "passes" : "fails") << "\n";
    std::cout << "I^W = " << one_based(iw).dump() << " (" << out["model_count"].get<std::string>() << " models)\n";
    for (const auto& [a, m] : web.models) {
        std::cout << "A = {" << subset_key(a) << "}:\n";
        for (const auto& p : render_family(m)) std::cout << "  " << p << "\n";
    }
    if (find_w) {
        int passing = 0;
        for (const auto& a : admissible)
            if (a.passes_C) {
                ++passing;
                std::cout << "W " << one_based(a.columns).dump() << " aug det " << a.aug_det.str() << "\n";
            }
        std::cout << admissible.size() << " lists pass (B), " << passing << " also pass (C)\n";
    }
    return 0;
}

int cmd_verify(const std::string& which, const std::string& format) {
    if (which.size() != 1 || std::string("ABCabc").find(which[0]) == std::string::npos)
        throw InputError("appendix must be A, B or C");
    ReplayResult r = replay_appendix(static_cast<char>(std::toupper(which[0])), fixture_dir());
    if (format == "json") {
        json a = json::array();
        for (const auto& e : r.entries) a.push_back({{"label", e.label}, {"pass", e.pass}, {"detail", e.detail}});
        std::cout << json{{"appendix", which}, {"pass", r.pass()}, {"entries", a}}.dump(2) << "\n";
    } else {
        int ok = 0;
        for (const auto& e : r.entries) {
            ok += e.pass;
            std::cout << (e.pass ? "PASS " : "FAIL ") << e.label;
            if (!e.pass) std::cout << ": " << e.detail;
            std::cout << "\n";
        }
        std::cout << ok << "/" << r.entries.size() << " entries match\n";
    }
    return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"framed toric duality: f-duals, mirror webs, appendix replays"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::string scenario, input;
    auto* dual = app.add_subcommand("dual", "f-dual of a partitioned framed toric variety");
    dual->add_option("--scenario", scenario, "y22, y33, ydd:<d>, y223p5, y223p6, y456");
    dual->add_option("--input", input, "JSON file {\"fan_matrix\": [[...]], \"blocks\": [[...]]}");

    std::string subsets = "none";
    bool find_w = false;
    int jobs = 1;
    auto* web = app.add_subcommand("web", "mirror web of a scenario");
    web->add_option("--scenario", scenario)->required();
    web->add_option("--subsets", subsets, "all | none | ';'-separated 1-based lists, '-' for the empty set");
    web->add_flag("--find-w", find_w, "enumerate every admissible W");
    web->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string which;
    auto* verify = app.add_subcommand("verify-appendix", "replay an appendix fixture");
    verify->add_option("which", which, "A, B or C")->required();

    for (auto* sub : {dual, web, verify})
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*dual) return cmd_dual(scenario, input, format);
        if (*web) return cmd_web(scenario, subsets, find_w, jobs, format);
        return cmd_verify(which, format);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedRegime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SizeGuard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
