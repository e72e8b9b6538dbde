#pragma once

#include "toric/types.hpp"

#include <utility>

namespace toric {

// Fraction-free (Bareiss) determinant; Scalar must be an exact integral domain.
template <class Scalar>
Scalar bareiss_determinant(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw Error("determinant of non-square matrix");
    if (n == 0) return Scalar(1);
    Scalar sign(1), prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Scalar(0);
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Rank over Q.
template <class Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
    RatMatrix a = m.template cast<Rat>();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
        Eigen::Index p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.row(r).swap(a.row(p));
        for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            a.row(i) -= f * a.row(r);
        }
        ++r;
    }
    return r;
}

Int determinant(const IntMatrix& a);

// Gauss-Jordan inverse over Q; throws on singular input.
RatMatrix exact_inverse(const RatMatrix& a);

struct HnfResult {
    IntMatrix H;  // A·U = H, column echelon form, positive pivots, reduced to the left of pivots
    IntMatrix U;
    Eigen::Index rank = 0;
};
HnfResult hnf(const IntMatrix& a);

// Row-style HNF (upper echelon, positive pivots, reduced above pivots), zero rows dropped.
IntMatrix row_hnf(const IntMatrix& a);

struct SnfResult {
    IntMatrix S;  // S = U·A·W
    IntMatrix U;
    IntMatrix W;
    std::vector<Int> diagonal;  // nonzero diagonal entries, divisibility chain
};
SnfResult snf(const IntMatrix& a);

// Basis (as rows) of the saturated integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

// Gale dual: r×(n+r) matrix Q with Q·V^T = 0 generating the saturated relation lattice.
IntMatrix gale_dual(const IntMatrix& v);

struct ClassGroupData {
    Eigen::Index free_rank = 0;
    std::vector<Int> invariant_factors;  // all > 1
    IntMatrix weight_matrix;
    IntMatrix torsion_matrix;      // one row per invariant factor
    std::vector<Int> torsion_moduli;
};
ClassGroupData class_group(const IntMatrix& v);

Int content(const IntVector& v);  // gcd of entries (0 for the zero vector)
IntVector primitive(const IntVector& v);
bool is_primitive(const IntVector& v);

// |det| of W with the row (0,…,0,1) appended.
Int augmented_determinant(const IntMatrix& w);

// Same row lattice (equal row HNF).
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

bool is_unimodular(const IntMatrix& u);

}  // namespace toric
