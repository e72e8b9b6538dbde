#pragma once

// Slow, independent reference implementations. None of these call the routine they check.

#include "toric/types.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace oracle {

using namespace toric;

// Determinant by cofactor expansion (small matrices only).
inline Int laplace_det(const IntMatrix& a) {
    const Eigen::Index n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Int d = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = a(r, c);
        Int term = a(0, j) * laplace_det(minor);
        d += (j % 2 ? -term : term);
    }
    return d;
}

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Invariant factors from determinantal divisors: d_k = gcd of k×k minors, s_k = d_k / d_{k-1}.
inline std::vector<Int> invariant_factors(const IntMatrix& a) {
    std::vector<Int> out;
    Int prev = 1;
    const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    for (int k = 1; k <= std::min(m, n); ++k) {
        Int g = 0;
        for_each_subset(m, k, [&](const std::vector<int>& rows) {
            for_each_subset(n, k, [&](const std::vector<int>& cols) {
                IntMatrix s(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) s(i, j) = a(rows[i], cols[j]);
                g = mp::gcd(g, mp::abs(laplace_det(s)));
            });
        });
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Rank over Q by rational elimination on a copy (kept separate from the library's exact_rank).
inline int rank(const IntMatrix& a0) {
    RatMatrix a = a0.cast<Rat>();
    int r = 0;
    for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        for (Eigen::Index j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

// Solve a square rational system; nullopt when singular.
inline std::optional<RatVector> solve(RatMatrix a, RatVector b) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = c; i < n; ++i)
            if (a(i, c) != 0) { p = i; break; }
        if (p < 0) return std::nullopt;
        a.row(c).swap(a.row(p));
        std::swap(b[c], b[p]);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c) / a(c, c);
            a.row(i) -= f * a.row(c);
            b[i] -= f * b[c];
        }
    }
    RatVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
    return x;
}

// Vertices of {m : N m >= -o} by scanning every n-subset of the rows.
inline std::vector<RatVector> brute_force_vertices(const IntMatrix& normals, const IntVector& offsets) {
    const int n = static_cast<int>(normals.cols()), rows = static_cast<int>(normals.rows());
    std::set<std::vector<Rat>> seen;
    std::vector<RatVector> out;
    for_each_subset(rows, n, [&](const std::vector<int>& s) {
        RatMatrix a(n, n);
        RatVector b(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a(i, j) = Rat(normals(s[i], j));
            b[i] = Rat(-offsets[s[i]]);
        }
        auto x = solve(a, b);
        if (!x) return;
        for (int r = 0; r < rows; ++r) {
            Rat v = 0;
            for (int j = 0; j < n; ++j) v += Rat(normals(r, j)) * (*x)[j];
            if (v < Rat(-offsets[r])) return;
        }
        std::vector<Rat> key(x->data(), x->data() + n);
        if (seen.insert(key).second) out.push_back(*x);
    });
    return out;
}

// Minimal hitting sets of a family of subsets of {0..vars-1}, by scanning all 2^vars subsets.
inline std::vector<std::vector<int>> minimal_transversals(int vars, const std::vector<std::vector<int>>& family) {
    std::vector<unsigned> masks;
    for (const auto& f : family) {
        unsigned m = 0;
        for (int x : f) m |= 1u << x;
        masks.push_back(m);
    }
    std::vector<unsigned> hitting;
    for (unsigned s = 0; s < (1u << vars); ++s)
        if (std::all_of(masks.begin(), masks.end(), [&](unsigned m) { return (m & s) != 0; })) hitting.push_back(s);
    std::vector<std::vector<int>> out;
    for (unsigned s : hitting) {
        bool minimal = true;
        for (int x = 0; x < vars && minimal; ++x)
            if (s >> x & 1) {
                unsigned t = s & ~(1u << x);
                if (std::all_of(masks.begin(), masks.end(), [&](unsigned m) { return (m & t) != 0; })) minimal = false;
            }
        if (!minimal) continue;
        std::vector<int> v;
        for (int x = 0; x < vars; ++x)
            if (s >> x & 1) v.push_back(x);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace oracle
