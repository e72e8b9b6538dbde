#include "toric/fan.hpp"

#include "toric/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

int find_column(const IntMatrix& m, const IntVector& v) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (m.col(j) == v) return static_cast<int>(j);
    return -1;
}

SpannedFan build(const RatPolytope& p0, const IntMatrix* ray_order) {
    const int n = p0.dim;
    // Facet H-representation is needed; recompute when P came from an arbitrary system.
    RatPolytope p = convex_hull(p0.vertices);
    for (const auto& h : p.halfspaces)
        if (h.offset <= 0) throw Error("origin not interior");

    std::vector<IntVector> prim;
    for (const auto& v : p.vertices) {
        Int den = 1;
        for (int i = 0; i < n; ++i) den = mp::lcm(den, mp::denominator(v[i]));
        IntVector x(n);
        for (int i = 0; i < n; ++i) x[i] = mp::numerator(v[i] * den);
        prim.push_back(primitive(x));
    }

    SpannedFan f;
    f.dim = n;
    if (ray_order) {
        f.rays = *ray_order;
    } else {
        std::vector<IntVector> r = prim;
        sort_lex_desc(r);
        r.erase(std::unique(r.begin(), r.end(), [](const IntVector& a, const IntVector& b) { return a == b; }), r.end());
        f.rays = from_columns(r, n);
    }
    std::vector<int> ray_of(prim.size());
    for (size_t k = 0; k < prim.size(); ++k) {
        ray_of[k] = find_column(f.rays, prim[k]);
        if (ray_of[k] < 0) throw Error("facet vertex " + to_string(prim[k]) + " is not a ray of the given fan matrix");
    }
    for (const auto& h : p.halfspaces) {
        IndexSet cone;
        for (size_t k = 0; k < p.vertices.size(); ++k) {
            Rat s = 0;
            for (int i = 0; i < n; ++i) s += Rat(h.normal[i]) * p.vertices[k][i];
            if (s == Rat(-h.offset)) cone.push_back(ray_of[k]);
        }
        std::sort(cone.begin(), cone.end());
        cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
        f.max_cones.push_back(std::move(cone));
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    if (!is_complete(f)) throw Error("spanned fan failed the completeness check");
    return f;
}

Eigen::Index cone_rank(const IntMatrix& rays, const IndexSet& idx) { return exact_rank(select_columns(rays, idx)); }

}  // namespace

SpannedFan spanned_fan(const RatPolytope& p) { return build(p, nullptr); }
SpannedFan spanned_fan(const RatPolytope& p, const IntMatrix& ray_order) { return build(p, &ray_order); }

bool is_complete(const SpannedFan& f) {
    const int n = f.dim;
    std::vector<bool> used(f.rays.cols(), false);
    for (const auto& c : f.max_cones) {
        if (cone_rank(f.rays, c) != n) return false;
        for (int j : c) used[j] = true;
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) return false;
    // Ridges: pairwise intersections spanning an (n-1)-dimensional cone.
    std::set<IndexSet> ridges;
    for (size_t a = 0; a < f.max_cones.size(); ++a)
        for (size_t b = a + 1; b < f.max_cones.size(); ++b) {
            IndexSet r;
            std::set_intersection(f.max_cones[a].begin(), f.max_cones[a].end(), f.max_cones[b].begin(),
                                  f.max_cones[b].end(), std::back_inserter(r));
            if (static_cast<int>(r.size()) >= n - 1 && cone_rank(f.rays, r) == n - 1) ridges.insert(r);
        }
    std::vector<int> per_cone(f.max_cones.size(), 0);
    for (const auto& r : ridges) {
        int count = 0;
        for (size_t a = 0; a < f.max_cones.size(); ++a)
            if (std::includes(f.max_cones[a].begin(), f.max_cones[a].end(), r.begin(), r.end())) {
                ++count;
                ++per_cone[a];
            }
        if (count != 2) return false;
    }
    // A full-dimensional cone has at least n facets, each of them a ridge.
    for (int c : per_cone)
        if (c < n) return false;
    return true;
}

MonomialIdeal minimalize(std::vector<IndexSet> gens) {
    for (auto& g : gens) std::sort(g.begin(), g.end());
    std::sort(gens.begin(), gens.end(), [](const IndexSet& a, const IndexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out.generators)
            if (std::includes(g.begin(), g.end(), h.begin(), h.end())) { redundant = true; break; }
        if (!redundant) out.generators.push_back(g);
    }
    std::sort(out.generators.begin(), out.generators.end());
    return out;
}

MonomialIdeal irrelevant_ideal(const SpannedFan& f) {
    std::vector<IndexSet> gens;
    for (const auto& c : f.max_cones) {
        IndexSet g;
        for (int j = 0; j < f.rays.cols(); ++j)
            if (!std::binary_search(c.begin(), c.end(), j)) g.push_back(j);
        gens.push_back(std::move(g));
    }
    return minimalize(std::move(gens));
}

std::vector<IndexSet> unstable_components(const MonomialIdeal& ideal) {
    // Minimal transversals, built generator by generator (Berge).
    std::vector<IndexSet> cur{IndexSet{}};
    for (const auto& g : ideal.generators) {
        std::vector<IndexSet> next;
        for (const auto& t : cur) {
            bool hits = false;
            for (int x : g) hits = hits || std::binary_search(t.begin(), t.end(), x);
            if (hits) {
                next.push_back(t);
                continue;
            }
            for (int x : g) {
                IndexSet u = t;
                u.insert(std::upper_bound(u.begin(), u.end(), x), x);
                next.push_back(std::move(u));
            }
        }
        cur = minimalize(std::move(next)).generators;
    }
    if (ideal.generators.empty()) return {};
    return cur;
}

WpsTest is_fan_matrix_of_wps_quotient(const IntMatrix& w) {
    WpsTest t;
    if (w.cols() != w.rows() + 1) {
        t.reason = "not an n x (n+1) matrix";
        return t;
    }
    if (exact_rank(w) != w.rows()) {
        t.reason = "rank deficient";
        return t;
    }
    IntMatrix q = gale_dual(w);
    IntVector row = q.row(0).transpose();
    if (row[0] < 0) row = -row;
    for (Eigen::Index j = 0; j < row.size(); ++j)
        if (row[j] <= 0) {
            t.reason = "Gale dual row is not strictly positive";
            t.q = row;
            return t;
        }
    t.accepted = true;
    t.q = row;
    for (const auto& d : snf(w.transpose()).diagonal)
        if (d > 1) t.torsion.push_back(d);
    return t;
}

}  // namespace toric
