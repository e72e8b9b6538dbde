#include "toric/polytope.hpp"

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace toric {

namespace {

Rat pairing(const IntVector& n, const RatVector& x) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < n.size(); ++i)
        if (n[i] != 0) s += Rat(n[i]) * x[i];
    return s;
}

bool satisfies(const Halfspace& h, const RatVector& x) { return pairing(h.normal, x) >= Rat(-h.offset); }

template <class V>
void dedup_sorted_desc(std::vector<V>& pts) {
    sort_lex_desc(pts);
    pts.erase(std::unique(pts.begin(), pts.end(), [](const V& a, const V& b) { return a == b; }), pts.end());
}

// Integer generator (den, den·p) of the ray through (1, p).
IntVector homogenize(const RatVector& p) {
    Int den = 1;
    for (Eigen::Index i = 0; i < p.size(); ++i) den = mp::lcm(den, mp::denominator(p[i]));
    IntVector g(p.size() + 1);
    g[0] = den;
    for (Eigen::Index i = 0; i < p.size(); ++i) g[i + 1] = mp::numerator(p[i] * den);
    return g;
}

}  // namespace

void sort_lex_desc(std::vector<RatVector>& pts) {
    std::sort(pts.begin(), pts.end(), [](const RatVector& a, const RatVector& b) { return lex_greater(a, b); });
}

void sort_lex_desc(std::vector<IntVector>& pts) {
    std::sort(pts.begin(), pts.end(), [](const IntVector& a, const IntVector& b) { return lex_greater(a, b); });
}

int affine_dimension(const std::vector<RatVector>& pts) {
    if (pts.empty()) return -1;
    RatMatrix m(pts.front().size() + 1, pts.size());
    for (size_t j = 0; j < pts.size(); ++j) {
        m(0, j) = 1;
        m.block(1, j, pts[j].size(), 1) = pts[j];
    }
    return static_cast<int>(exact_rank(m)) - 1;
}

RatPolytope polytope_from_halfspaces(int dim, std::vector<Halfspace> hs) {
    // Homogenised cone {(t, m) : t >= 0, a_i t + ⟨n_i, m⟩ >= 0}; rays with t > 0 are vertices.
    IntMatrix a(hs.size() + 1, dim + 1);
    a.setZero();
    a(0, 0) = 1;
    for (size_t i = 0; i < hs.size(); ++i) {
        a(i + 1, 0) = hs[i].offset;
        a.block(i + 1, 1, 1, dim) = hs[i].normal.transpose();
    }
    std::vector<IntVector> rays;
    try {
        rays = extreme_rays(a);
    } catch (const Error&) {
        throw Error("fan not complete");
    }
    RatPolytope p;
    p.dim = dim;
    p.halfspaces = std::move(hs);
    for (const auto& r : rays) {
        if (r[0] == 0) throw Error("fan not complete");
        RatVector v(dim);
        for (int i = 0; i < dim; ++i) v[i] = Rat(r[i + 1], r[0]);
        p.vertices.push_back(std::move(v));
    }
    dedup_sorted_desc(p.vertices);
    return p;
}

RatPolytope framing_polytope(const IntMatrix& v, const IntVector& a) {
    if (a.size() != v.cols()) throw Error("framing length does not match the fan matrix");
    std::vector<Halfspace> hs;
    for (Eigen::Index i = 0; i < v.cols(); ++i) hs.push_back({v.col(i), a[i]});
    return polytope_from_halfspaces(static_cast<int>(v.rows()), std::move(hs));
}

const std::vector<RatVector>& vertices(const RatPolytope& p) { return p.vertices; }

RatPolytope convex_hull(const std::vector<RatVector>& points) {
    if (points.empty()) throw Error("convex hull of no points");
    std::vector<RatVector> pts = points;
    dedup_sorted_desc(pts);
    const int n = static_cast<int>(pts.front().size());
    int adim = affine_dimension(pts);
    if (adim < n) throw Error("degenerate hull: affine dimension " + std::to_string(adim) + " < " + std::to_string(n));

    // Facets are the extreme rays of the dual of the homogenised cone.
    IntMatrix g(pts.size(), n + 1);
    for (size_t j = 0; j < pts.size(); ++j) g.row(j) = homogenize(pts[j]).transpose();
    RatPolytope p;
    p.dim = n;
    for (const auto& y : extreme_rays(g)) p.halfspaces.push_back({y.tail(n), y[0]});
    std::sort(p.halfspaces.begin(), p.halfspaces.end(), [](const Halfspace& a, const Halfspace& b) {
        if (a.normal != b.normal) return lex_greater(a.normal, b.normal);
        return a.offset < b.offset;
    });

    // A point is extreme iff its tight facets cut out a point (rank n).
    for (const auto& x : pts) {
        IndexSet t = tight_halfspaces(p, x);
        RatMatrix nm(t.size(), n);
        for (size_t k = 0; k < t.size(); ++k) nm.row(k) = p.halfspaces[t[k]].normal.cast<Rat>().transpose();
        if (exact_rank(nm) == n) p.vertices.push_back(x);
    }
    return p;
}

RatPolytope convex_hull(const IntMatrix& cols) {
    std::vector<RatVector> pts;
    for (Eigen::Index j = 0; j < cols.cols(); ++j) pts.push_back(cols.col(j).cast<Rat>());
    return convex_hull(pts);
}

bool contains(const RatPolytope& p, const RatVector& x) {
    for (const auto& h : p.halfspaces)
        if (!satisfies(h, x)) return false;
    return true;
}

bool contains(const RatPolytope& p, const IntVector& x) { return contains(p, RatVector(x.cast<Rat>())); }

IndexSet tight_halfspaces(const RatPolytope& p, const RatVector& x) {
    IndexSet t;
    for (size_t i = 0; i < p.halfspaces.size(); ++i)
        if (pairing(p.halfspaces[i].normal, x) == Rat(-p.halfspaces[i].offset)) t.push_back(static_cast<int>(i));
    return t;
}

std::vector<IntVector> lattice_points(const RatPolytope& p) {
    std::vector<IntVector> out;
    if (p.vertices.empty()) return out;
    const int n = p.dim;
    std::vector<Int> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = ceil_div(p.vertices.front()[i]);
        hi[i] = floor_div(p.vertices.front()[i]);
        for (const auto& v : p.vertices) {
            lo[i] = std::min(lo[i], ceil_div(v[i]));
            hi[i] = std::max(hi[i], floor_div(v[i]));
        }
        if (lo[i] > hi[i]) return out;
    }
    if (n == 0) {
        out.emplace_back(0);
        return out;
    }

    // Machine-integer scan when every pairing provably fits in 62 bits.
    Int bound = 0, box = 0;
    for (int i = 0; i < n; ++i) box = std::max(box, std::max(mp::abs(lo[i]), mp::abs(hi[i])));
    for (const auto& h : p.halfspaces) {
        Int s = mp::abs(h.offset);
        for (int i = 0; i < n; ++i) s += mp::abs(h.normal[i]) * box;
        bound = std::max(bound, s);
    }
    const Int limit = Int(1) << 62;
    if (bound < limit) {
        const size_t m = p.halfspaces.size();
        std::vector<int64_t> nrm(m * n), off(m);
        for (size_t k = 0; k < m; ++k) {
            off[k] = p.halfspaces[k].offset.convert_to<int64_t>();
            for (int i = 0; i < n; ++i) nrm[k * n + i] = p.halfspaces[k].normal[i].convert_to<int64_t>();
        }
        std::vector<int64_t> l(n), h(n), x(n);
        for (int i = 0; i < n; ++i) {
            l[i] = lo[i].convert_to<int64_t>();
            h[i] = hi[i].convert_to<int64_t>();
        }
        x = h;
        // Odometer from the top corner down gives lexicographically descending output.
        for (;;) {
            bool ok = true;
            for (size_t k = 0; k < m && ok; ++k) {
                int64_t s = off[k];
                for (int i = 0; i < n; ++i) s += nrm[k * n + i] * x[i];
                ok = s >= 0;
            }
            if (ok) {
                IntVector pt(n);
                for (int i = 0; i < n; ++i) pt[i] = x[i];
                out.push_back(std::move(pt));
            }
            int i = n - 1;
            while (i >= 0 && x[i] == l[i]) { x[i] = h[i]; --i; }
            if (i < 0) break;
            --x[i];
        }
        return out;
    }

    IntVector x(n);
    for (int i = 0; i < n; ++i) x[i] = hi[i];
    for (;;) {
        if (contains(p, x)) out.push_back(x);
        int i = n - 1;
        while (i >= 0 && x[i] == lo[i]) { x[i] = hi[i]; --i; }
        if (i < 0) break;
        x[i] -= 1;
    }
    return out;
}

RatPolytope integer_part(const RatPolytope& p) {
    auto pts = lattice_points(p);
    if (pts.empty()) throw Error("polytope has no lattice points");
    std::vector<RatVector> rp;
    for (auto& x : pts) rp.push_back(x.cast<Rat>());
    return convex_hull(rp);
}

IntMatrix primitive_points_excluding_origin(const RatPolytope& p) {
    for (const auto& h : p.halfspaces) {
        bool zero_normal = true;
        for (Eigen::Index i = 0; i < h.normal.size(); ++i) zero_normal = zero_normal && h.normal[i] == 0;
        if (!zero_normal && h.offset <= 0) throw Error("origin not interior");
    }
    std::vector<IntVector> keep;
    for (auto& x : lattice_points(p))
        if (content(x) == 1) keep.push_back(x);
    return from_columns(keep, p.dim);
}

IntMatrix vertex_matrix(const RatPolytope& p) {
    std::vector<IntVector> cols;
    for (const auto& v : p.vertices) cols.push_back(to_int(v));
    return from_columns(cols, p.dim);
}

}  // namespace toric
