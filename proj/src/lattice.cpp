#include "toric/lattice.hpp"

#include <algorithm>

namespace toric {

namespace {

struct Bezout {
    Int g, x, y;  // x·a + y·b = g = gcd(a, b) >= 0
};

Bezout ext_gcd(const Int& a, const Int& b) {
    // When a | b keep a as the pivot: a plain elimination step, never a swap.
    if (a != 0 && b % a == 0) {
        if (a > 0) return {a, 1, 0};
        return {-a, -1, 0};
    }
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return {r0, s0, t0};
}

// Floor division for the reduction step (remainder in [0, d) for d > 0).
Int fdiv(const Int& n, const Int& d) {
    Int q = n / d;
    if (q * d != n && ((n < 0) != (d < 0))) q -= 1;
    return q;
}

// Replace columns (p, q) of M by (x·p + y·q, u·p + v·q).
void combine_cols(IntMatrix& m, Eigen::Index p, Eigen::Index q,
                  const Int& x, const Int& y, const Int& u, const Int& v) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Int a = m(i, p), b = m(i, q);
        m(i, p) = x * a + y * b;
        m(i, q) = u * a + v * b;
    }
}

void combine_rows(IntMatrix& m, Eigen::Index p, Eigen::Index q,
                  const Int& x, const Int& y, const Int& u, const Int& v) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        Int a = m(p, j), b = m(q, j);
        m(p, j) = x * a + y * b;
        m(q, j) = u * a + v * b;
    }
}

}  // namespace

Int determinant(const IntMatrix& a) { return bareiss_determinant<Int>(a); }

RatMatrix exact_inverse(const RatMatrix& a0) {
    const Eigen::Index n = a0.rows();
    if (n != a0.cols()) throw Error("inverse of non-square matrix");
    RatMatrix a = a0, inv = RatMatrix::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw Error("singular matrix");
        a.row(c).swap(a.row(p));
        inv.row(c).swap(inv.row(p));
        Rat piv = a(c, c);
        a.row(c) /= piv;
        inv.row(c) /= piv;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            a.row(i) -= f * a.row(c);
            inv.row(i) -= f * inv.row(c);
        }
    }
    return inv;
}

HnfResult hnf(const IntMatrix& a) {
    if (a.size() == 0) throw Error("hnf of empty matrix");
    const Eigen::Index m = a.rows(), n = a.cols();
    HnfResult res{a, IntMatrix::Identity(n, n), 0};
    IntMatrix& H = res.H;
    IntMatrix& U = res.U;
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < m && r < n; ++i) {
        for (Eigen::Index j = r + 1; j < n; ++j) {
            if (H(i, j) == 0) continue;
            Int p = H(i, r), q = H(i, j);
            Bezout b = ext_gcd(p, q);
            Int u = -q / b.g, v = p / b.g;
            combine_cols(H, r, j, b.x, b.y, u, v);
            combine_cols(U, r, j, b.x, b.y, u, v);
        }
        if (H(i, r) == 0) continue;
        if (H(i, r) < 0) {
            H.col(r) = -H.col(r);
            U.col(r) = -U.col(r);
        }
        for (Eigen::Index c = 0; c < r; ++c) {
            Int f = fdiv(H(i, c), H(i, r));
            if (f == 0) continue;
            H.col(c) -= f * H.col(r);
            U.col(c) -= f * U.col(r);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

IntMatrix row_hnf(const IntMatrix& a) {
    if (a.rows() == 0) return IntMatrix(0, a.cols());
    HnfResult h = hnf(a.transpose());
    IntMatrix t = h.H.transpose();
    return t.topRows(h.rank);
}

SnfResult snf(const IntMatrix& a) {
    if (a.size() == 0) throw Error("snf of empty matrix");
    const Eigen::Index m = a.rows(), n = a.cols();
    SnfResult res{a, IntMatrix::Identity(m, m), IntMatrix::Identity(n, n), {}};
    IntMatrix& S = res.S;
    for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
        // Bring some nonzero entry to (t, t).
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = t; i < m && pi < 0; ++i)
            for (Eigen::Index j = t; j < n; ++j)
                if (S(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        if (pi != t) { S.row(t).swap(S.row(pi)); res.U.row(t).swap(res.U.row(pi)); }
        if (pj != t) { S.col(t).swap(S.col(pj)); res.W.col(t).swap(res.W.col(pj)); }

        for (;;) {
            for (Eigen::Index i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                Int p = S(t, t), q = S(i, t);
                Bezout b = ext_gcd(p, q);
                Int u = -q / b.g, v = p / b.g;
                combine_rows(S, t, i, b.x, b.y, u, v);
                combine_rows(res.U, t, i, b.x, b.y, u, v);
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                Int p = S(t, t), q = S(t, j);
                Bezout b = ext_gcd(p, q);
                Int u = -q / b.g, v = p / b.g;
                combine_cols(S, t, j, b.x, b.y, u, v);
                combine_cols(res.W, t, j, b.x, b.y, u, v);
            }
            bool clean = true;
            for (Eigen::Index i = t + 1; i < m && clean; ++i) clean = S(i, t) == 0;
            if (!clean) continue;  // column step refilled the column
            // Divisibility of the remaining block by the pivot.
            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < n; ++j)
                    if (S(i, j) % S(t, t) != 0) { bad = i; break; }
            if (bad < 0) break;
            S.row(t) += S.row(bad);
            res.U.row(t) += res.U.row(bad);
        }
        if (S(t, t) < 0) {
            S.row(t) = -S.row(t);
            res.U.row(t) = -res.U.row(t);
        }
        res.diagonal.push_back(S(t, t));
    }
    return res;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    HnfResult h = hnf(a);
    const Eigen::Index k = a.cols() - h.rank;
    return h.U.rightCols(k).transpose();
}

IntMatrix gale_dual(const IntMatrix& v) {
    if (exact_rank(v) != v.rows()) throw Error("not a fan matrix");
    IntMatrix k = integer_kernel(v);
    if (k.rows() == 0) return IntMatrix(0, v.cols());
    return row_hnf(k);
}

ClassGroupData class_group(const IntMatrix& v) {
    ClassGroupData cg;
    cg.weight_matrix = gale_dual(v);
    cg.free_rank = cg.weight_matrix.rows();
    SnfResult s = snf(v.transpose());
    for (size_t i = 0; i < s.diagonal.size(); ++i) {
        const Int& d = s.diagonal[i];
        if (d <= 1) continue;
        cg.invariant_factors.push_back(d);
        IntVector row = s.U.row(i).transpose();
        for (Eigen::Index j = 0; j < row.size(); ++j) {
            row[j] %= d;
            if (row[j] < 0) row[j] += d;
        }
        cg.torsion_matrix.conservativeResize(cg.torsion_matrix.rows() + 1, v.cols());
        cg.torsion_matrix.row(cg.torsion_matrix.rows() - 1) = row.transpose();
        cg.torsion_moduli.push_back(d);
    }
    if (cg.torsion_matrix.size() == 0) cg.torsion_matrix = IntMatrix(0, v.cols());
    return cg;
}

Int content(const IntVector& v) {
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = mp::gcd(g, mp::abs(v[i]));
    return g;
}

IntVector primitive(const IntVector& v) {
    Int g = content(v);
    if (g == 0) throw Error("primitive of the zero vector");
    IntVector r = v;
    for (Eigen::Index i = 0; i < r.size(); ++i) r[i] /= g;
    return r;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

Int augmented_determinant(const IntMatrix& w) {
    if (w.cols() != w.rows() + 1) throw Error("augmented determinant needs an n x (n+1) matrix");
    IntMatrix a(w.rows() + 1, w.cols());
    a.topRows(w.rows()) = w;
    a.row(w.rows()).setZero();
    a(w.rows(), w.cols() - 1) = 1;
    return mp::abs(determinant(a));
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) return false;
    IntMatrix ha = row_hnf(a), hb = row_hnf(b);
    return ha.rows() == hb.rows() && ha == hb;
}

bool is_unimodular(const IntMatrix& u) {
    return u.rows() == u.cols() && mp::abs(determinant(u)) == 1;
}

}  // namespace toric
