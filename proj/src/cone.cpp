#include "toric/cone.hpp"

#include "toric/lattice.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <numeric>

namespace toric {

namespace {

struct Ray {
    IntVector x;
    boost::dynamic_bitset<> zero;  // processed rows tight at x
};

Int dot_row(const IntMatrix& a, Eigen::Index i, const IntVector& x) {
    Int s = 0;
    for (Eigen::Index j = 0; j < x.size(); ++j)
        if (a(i, j) != 0 && x[j] != 0) s += a(i, j) * x[j];
    return s;
}

}  // namespace

std::vector<IntVector> extreme_rays(const IntMatrix& a) {
    const Eigen::Index m = a.rows(), d = a.cols();
    if (d == 0) return {};

    // Greedy choice of d independent rows for the initial simplicial cone.
    std::vector<Eigen::Index> basis, rest;
    {
        RatMatrix echelon(0, d);
        for (Eigen::Index i = 0; i < m; ++i) {
            if (static_cast<Eigen::Index>(basis.size()) == d) { rest.push_back(i); continue; }
            RatMatrix trial(echelon.rows() + 1, d);
            trial.topRows(echelon.rows()) = echelon;
            trial.row(echelon.rows()) = a.row(i).cast<Rat>();
            if (exact_rank(trial) > echelon.rows()) {
                echelon = trial;
                basis.push_back(i);
            } else {
                rest.push_back(i);
            }
        }
    }
    if (static_cast<Eigen::Index>(basis.size()) < d) throw Error("cone is not pointed");

    // Lexicographic insertion order keeps intermediate ray sets small in practice.
    std::stable_sort(rest.begin(), rest.end(), [&](Eigen::Index p, Eigen::Index q) {
        IntVector rp = a.row(p).transpose(), rq = a.row(q).transpose();
        return lex_less(rp, rq);
    });

    RatMatrix b(d, d);
    for (Eigen::Index i = 0; i < d; ++i) b.row(i) = a.row(basis[i]).cast<Rat>();
    RatMatrix binv = exact_inverse(b);

    std::vector<Ray> rays;
    for (Eigen::Index j = 0; j < d; ++j) {
        RatVector col = binv.col(j);
        Int den = 1;
        for (Eigen::Index i = 0; i < d; ++i) den = mp::lcm(den, mp::denominator(col[i]));
        IntVector x(d);
        for (Eigen::Index i = 0; i < d; ++i) x[i] = mp::numerator(col[i] * den);
        Ray r{primitive(x), boost::dynamic_bitset<>(m)};
        for (Eigen::Index i = 0; i < d; ++i)
            if (i != j) r.zero.set(basis[i]);
        rays.push_back(std::move(r));
    }

    for (Eigen::Index row : rest) {
        std::vector<Int> s(rays.size());
        std::vector<size_t> pos, neg, zer;
        for (size_t k = 0; k < rays.size(); ++k) {
            s[k] = dot_row(a, row, rays[k].x);
            if (s[k] > 0) pos.push_back(k);
            else if (s[k] < 0) neg.push_back(k);
            else zer.push_back(k);
        }
        if (neg.empty()) {
            for (size_t k : zer) rays[k].zero.set(row);
            continue;
        }
        std::vector<Ray> next;
        for (size_t k : pos) next.push_back(rays[k]);
        for (size_t k : zer) {
            next.push_back(rays[k]);
            next.back().zero.set(row);
        }
        for (size_t p : pos) {
            for (size_t n : neg) {
                boost::dynamic_bitset<> common = rays[p].zero & rays[n].zero;
                if (static_cast<Eigen::Index>(common.count()) + 2 < d) continue;
                bool adjacent = true;
                for (size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == p || k == n) continue;
                    if (common.is_subset_of(rays[k].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector x = s[p] * rays[n].x - s[n] * rays[p].x;
                Ray r{primitive(x), common};
                r.zero.set(row);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.x));
    return out;
}

bool lp_feasible(const RatMatrix& a0, const RatVector& b0) {
    const Eigen::Index m = a0.rows(), n = a0.cols();
    // Tableau [A | I | b] with artificial basis; objective = sum of artificials.
    RatMatrix t(m + 1, n + m + 1);
    t.setZero();
    for (Eigen::Index i = 0; i < m; ++i) {
        bool flip = b0[i] < 0;
        for (Eigen::Index j = 0; j < n; ++j) t(i, j) = flip ? Rat(-a0(i, j)) : a0(i, j);
        t(i, n + i) = 1;
        t(i, n + m) = flip ? Rat(-b0[i]) : b0[i];
    }
    // Reduced costs of the phase-one objective.
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j <= n + m; ++j)
            if (j < n || j == n + m) t(m, j) -= t(i, j);
    std::vector<Eigen::Index> basic(m);
    std::iota(basic.begin(), basic.end(), n);

    for (;;) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < n + m; ++j)
            if (t(m, j) < 0) { enter = j; break; }  // Bland: smallest index
        if (enter < 0) break;
        Eigen::Index leave = -1;
        Rat best;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (t(i, enter) <= 0) continue;
            Rat ratio = t(i, n + m) / t(i, enter);
            if (leave < 0 || ratio < best || (ratio == best && basic[i] < basic[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) break;  // unbounded phase-one cannot happen; defensive
        Rat piv = t(leave, enter);
        t.row(leave) /= piv;
        for (Eigen::Index i = 0; i <= m; ++i) {
            if (i == leave || t(i, enter) == 0) continue;
            Rat f = t(i, enter);
            t.row(i) -= f * t.row(leave);
        }
        basic[leave] = enter;
    }
    return t(m, n + m) == 0;
}

bool in_convex_hull(const RatVector& p, const std::vector<RatVector>& pts) {
    if (pts.empty()) return false;
    const Eigen::Index d = p.size();
    RatMatrix a(d + 1, pts.size());
    RatVector b(d + 1);
    for (size_t j = 0; j < pts.size(); ++j) {
        a.block(0, j, d, 1) = pts[j];
        a(d, j) = 1;
    }
    b.head(d) = p;
    b[d] = 1;
    return lp_feasible(a, b);
}

}  // namespace toric
