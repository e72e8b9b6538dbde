#include "properties.hpp"

#include "oracles.hpp"
#include "toric/cone.hpp"
#include "toric/fan.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"

#include <sstream>

namespace props {

using namespace toric;

namespace {

std::string show(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
    }
    return os.str() + "]";
}

Outcome fail(Outcome o, const std::string& what) {
    o.ok = false;
    o.detail = what;
    return o;
}

// Random n×(n+r) integer matrix of rank n.
IntMatrix random_fan_matrix(std::mt19937& rng) {
    std::uniform_int_distribution<int> dn(1, 4), dr(1, 3);
    while (true) {
        const int n = dn(rng), r = dr(rng);
        IntMatrix v = oracle::random_matrix(rng, n, n + r, -3, 3);
        if (oracle::rank(v) == n) return v;
    }
}

// Full-dimensional point cloud of up to 15 points in dimension 2..4.
std::vector<RatVector> random_cloud(std::mt19937& rng, int& dim) {
    std::uniform_int_distribution<int> dd(2, 4);
    while (true) {
        dim = dd(rng);
        std::uniform_int_distribution<int> dk(dim + 1, 15);
        const int k = dk(rng);
        IntMatrix pts = oracle::random_matrix(rng, dim, k, -4, 4);
        IntMatrix diff(dim, k - 1);
        for (int j = 1; j < k; ++j) diff.col(j - 1) = pts.col(j) - pts.col(0);
        if (oracle::rank(diff) != dim) continue;
        std::vector<RatVector> out;
        for (int j = 0; j < k; ++j) out.push_back(pts.col(j).cast<Rat>());
        return out;
    }
}

bool column_echelon(const IntMatrix& h, Eigen::Index rank) {
    Eigen::Index last = -1;
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
        Eigen::Index p = 0;
        while (p < h.rows() && h(p, j) == 0) ++p;
        if (j >= rank) {
            if (p != h.rows()) return false;
            continue;
        }
        if (p == h.rows() || p <= last || h(p, j) <= 0) return false;
        last = p;
    }
    return true;
}

}  // namespace

Outcome gale_orthogonality(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    Outcome o;
    for (; o.cases < count; ++o.cases) {
        IntMatrix v = random_fan_matrix(rng);
        IntMatrix q = gale_dual(v);
        const Eigen::Index r = v.cols() - v.rows();
        if (q.rows() != r) return fail(o, "wrong number of relations for " + show(v));
        if (!(q * v.transpose()).isZero()) return fail(o, "Q·V^T != 0 for " + show(v));
        // Saturation: the r×r minors of Q are coprime.
        auto f = oracle::invariant_factors(q);
        if (static_cast<Eigen::Index>(f.size()) != r || f.back() != 1)
            return fail(o, "relation lattice not saturated for " + show(v));
    }
    return o;
}

Outcome hnf_snf_identities(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dm(1, 4), dn(1, 5);
    Outcome o;
    for (; o.cases < count; ++o.cases) {
        IntMatrix a = oracle::random_matrix(rng, dm(rng), dn(rng), -6, 6);
        HnfResult h = hnf(a);
        if (a * h.U != h.H) return fail(o, "A·U != H for " + show(a));
        if (mp::abs(oracle::laplace_det(h.U)) != 1) return fail(o, "HNF transform not unimodular for " + show(a));
        if (h.rank != oracle::rank(a) || !column_echelon(h.H, h.rank)) return fail(o, "H not in echelon form for " + show(a));

        SnfResult s = snf(a);
        if (s.U * a * s.W != s.S) return fail(o, "U·A·W != S for " + show(a));
        if (mp::abs(oracle::laplace_det(s.U)) != 1 || mp::abs(oracle::laplace_det(s.W)) != 1)
            return fail(o, "SNF transforms not unimodular for " + show(a));
        for (Eigen::Index i = 0; i < s.S.rows(); ++i)
            for (Eigen::Index j = 0; j < s.S.cols(); ++j)
                if (i != j && s.S(i, j) != 0) return fail(o, "S not diagonal for " + show(a));
        auto want = oracle::invariant_factors(a);
        if (s.diagonal != want) return fail(o, "invariant factors differ from determinantal divisors for " + show(a));
        for (size_t i = 0; i < s.diagonal.size(); ++i)
            if (s.S(i, i) != s.diagonal[i]) return fail(o, "diagonal list disagrees with S for " + show(a));
    }
    return o;
}

Outcome hull_extremality(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    Outcome o;
    for (; o.cases < count; ++o.cases) {
        int dim = 0;
        auto pts = random_cloud(rng, dim);
        RatPolytope p = convex_hull(pts);
        for (const auto& x : pts) {
            std::vector<RatVector> others;
            for (const auto& y : pts)
                if (y != x) others.push_back(y);
            const bool extreme = !in_convex_hull(x, others);
            const bool listed = std::find(p.vertices.begin(), p.vertices.end(), x) != p.vertices.end();
            if (extreme != listed) return fail(o, "hull and LP disagree on extremality in dimension " + std::to_string(dim));
            if (!contains(p, x)) return fail(o, "input point outside its hull");
        }
        for (size_t k = 0; k < p.halfspaces.size(); ++k) {
            int tight = 0;
            for (const auto& v : p.vertices) {
                Rat s = 0;
                for (int i = 0; i < dim; ++i) s += Rat(p.halfspaces[k].normal[i]) * v[i];
                tight += s == Rat(-p.halfspaces[k].offset);
            }
            if (tight < dim) return fail(o, "halfspace is not a facet");
        }
    }
    return o;
}

Outcome unstable_components_vs_hitting_sets(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dv(1, 12), dg(1, 6);
    Outcome o;
    for (; o.cases < count; ++o.cases) {
        const int vars = dv(rng), ngen = dg(rng);
        std::uniform_int_distribution<unsigned> dmask(1, (1u << vars) - 1);
        std::vector<IndexSet> gens;
        for (int g = 0; g < ngen; ++g) {
            unsigned m = dmask(rng);
            IndexSet s;
            for (int x = 0; x < vars; ++x)
                if (m >> x & 1) s.push_back(x);
            gens.push_back(s);
        }
        auto got = unstable_components(minimalize(gens));
        std::sort(got.begin(), got.end());
        if (got != oracle::minimal_transversals(vars, gens))
            return fail(o, "minimal primes differ from minimal hitting sets (" + std::to_string(vars) + " variables)");
    }
    return o;
}

Outcome hull_round_trip(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    Outcome o;
    auto same_faces = [](const RatPolytope& a, const RatPolytope& b) {
        if (a.vertices != b.vertices || a.halfspaces.size() != b.halfspaces.size()) return false;
        for (size_t k = 0; k < a.halfspaces.size(); ++k)
            if (a.halfspaces[k].normal != b.halfspaces[k].normal || a.halfspaces[k].offset != b.halfspaces[k].offset)
                return false;
        return true;
    };
    for (; o.cases < count; ++o.cases) {
        int dim = 0;
        RatPolytope p = convex_hull(random_cloud(rng, dim));
        if (!same_faces(p, convex_hull(p.vertices))) return fail(o, "convex_hull(vertices(P)) != P");
        RatPolytope h = polytope_from_halfspaces(dim, p.halfspaces);
        if (h.vertices != p.vertices) return fail(o, "vertices of the facet description differ from the hull");

        if (p.halfspaces.size() > 20) continue;  // keep the subset scan cheap
        IntMatrix normals(p.halfspaces.size(), dim);
        IntVector offsets(p.halfspaces.size());
        for (size_t k = 0; k < p.halfspaces.size(); ++k) {
            normals.row(k) = p.halfspaces[k].normal.transpose();
            offsets[k] = p.halfspaces[k].offset;
        }
        auto brute = oracle::brute_force_vertices(normals, offsets);
        sort_lex_desc(brute);
        if (brute != p.vertices) return fail(o, "vertices differ from the n-subset scan");
    }
    return o;
}

}  // namespace props
