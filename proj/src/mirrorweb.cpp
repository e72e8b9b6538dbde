#include "toric/mirrorweb.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>

namespace toric {

std::vector<BlockCheck> check_assumption_A(const PartitionedFtv& x) {
    std::vector<BlockCheck> out;
    for (size_t k = 0; k < x.blocks.size(); ++k) {
        const IntVector& a = x.blocks[k];
        IndexSet s;
        for (int i = 0; i < a.size(); ++i)
            if (a[i] != 0) s.push_back(i);
        if (s.empty() || s.back() - s.front() + 1 != static_cast<int>(s.size()))
            throw Error("block " + std::to_string(k + 1) + " is not in normal form");
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (a[s[i]] != 1) throw Error("block " + std::to_string(k + 1) + " is not in normal form");
        BlockCheck c;
        c.m = static_cast<int>(s.size());
        c.delta = a[s.back()].convert_to<int>();
        c.pass = c.m >= 3 || (c.m == 2 && c.delta == 1);
        out.push_back(c);
    }
    return out;
}

namespace {

// Bareiss on machine integers; false when the Hadamard bound does not fit.
bool det_i64(std::vector<int64_t> a, int n, int64_t& out) {
    long double bound = 1;
    for (int i = 0; i < n; ++i) {
        long double s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<long double>(a[i * n + j]) * a[i * n + j];
        bound *= std::sqrt(s);
    }
    if (bound * bound > 4e18L) return false;
    int64_t sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            int p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) { out = 0; return true; }
            for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                __int128 v = static_cast<__int128>(a[i * n + j]) * a[k * n + k] -
                             static_cast<__int128>(a[i * n + k]) * a[k * n + j];
                a[i * n + j] = static_cast<int64_t>(v / prev);
            }
        prev = a[k * n + k];
    }
    out = sign * a[(n - 1) * n + (n - 1)];
    return true;
}

// Kernel generator of an n×(n+1) matrix by Cramer's rule (not yet made primitive).
std::vector<Int> cramer_kernel(const IntMatrix& w) {
    const int n = static_cast<int>(w.rows());
    std::vector<Int> q(n + 1);
    std::vector<int64_t> small(n * n);
    for (int skip = 0; skip <= n; ++skip) {
        bool fits = true;
        for (int i = 0; i < n && fits; ++i)
            for (int j = 0, c = 0; j <= n; ++j) {
                if (j == skip) continue;
                if (mp::abs(w(i, j)) > 1000000) { fits = false; break; }
                small[i * n + c++] = w(i, j).convert_to<int64_t>();
            }
        int64_t d = 0;
        if (fits && det_i64(small, n, d)) {
            q[skip] = d;
        } else {
            IntMatrix m(n, n);
            for (int j = 0, c = 0; j <= n; ++j)
                if (j != skip) m.col(c++) = w.col(j);
            q[skip] = determinant(m);
        }
        if (skip % 2) q[skip] = -q[skip];
    }
    return q;
}

}  // namespace

bool passes_assumption_B(const IntMatrix& w) {
    if (w.cols() != w.rows() + 1) return false;
    auto q = cramer_kernel(w);
    const bool positive = q[0] > 0;
    for (const auto& x : q)
        if (x == 0 || (x > 0) != positive) return false;
    return true;
}

bool passes_assumption_C(const PartitionedFtv& base, const IntMatrix& w, const std::vector<IntVector>& c_blocks) {
    // (X, c) must carry a framing of the same partition shape as the base.
    auto parts = base.partition();
    if (parts.size() != c_blocks.size()) return false;
    for (size_t k = 0; k < parts.size(); ++k)
        if (static_cast<Eigen::Index>(parts[k].size()) != (c_blocks[k].array() != 0).count()) return false;
    try {
        PartitionedFtv lt{w, c_blocks};
        ReverseDual r = reverse_dual_core(lt);
        // c_k must dualize to a_k itself, not merely to some block of a.
        std::vector<IntVector> by_source(r.blocks.size());
        for (size_t j = 0; j < r.blocks.size(); ++j) by_source[r.source_block[j]] = r.blocks[j];
        return same_ftv(base, {r.fan_matrix, by_source}, true);
    } catch (const Error&) {
        return false;
    }
}

std::optional<AdmissibleW> evaluate_W(const PartitionedFtv& base, const IntMatrix& lambda, const IndexSet& columns,
                                      const std::vector<IntVector>& c_blocks) {
    IntMatrix w = select_columns(lambda, columns);
    if (!passes_assumption_B(w)) return std::nullopt;
    WpsTest t = is_fan_matrix_of_wps_quotient(w);
    if (!t.accepted) return std::nullopt;
    AdmissibleW a;
    a.columns = columns;
    a.w = w;
    a.q = t.q;
    a.torsion = t.torsion;
    a.c_blocks = c_blocks;
    a.aug_det = augmented_determinant(w);
    a.passes_C = passes_assumption_C(base, w, c_blocks);
    return a;
}

std::optional<AdmissibleW> evaluate_W(const PartitionedFtv& base, const IntMatrix& lambda,
                                      const std::vector<IntVector>& b, const IndexSet& columns) {
    std::vector<IntVector> c;
    for (const auto& bk : b) c.push_back(select_entries(bk, columns));
    return evaluate_W(base, lambda, columns, c);
}

std::vector<AdmissibleW> find_admissible_W(const PartitionedFtv& base, const IntMatrix& lambda,
                                           const std::vector<IntVector>& b, int jobs) {
    const int n = static_cast<int>(lambda.rows()), total = static_cast<int>(lambda.cols());
    const int k = n + 1;
    if (k > total) return {};
    jobs = std::max(1, jobs);
    std::vector<std::vector<AdmissibleW>> found(jobs);
    std::atomic<bool> failed{false};
    std::string failure;
    auto worker = [&](int t) {
        try {
            IndexSet cols(k);
            for (int i = 0; i < k; ++i) cols[i] = i;
            for (long long idx = 0;; ++idx) {
                if (idx % jobs == t) {
                    if (auto a = evaluate_W(base, lambda, b, cols)) found[t].push_back(std::move(*a));
                }
                int i = k - 1;
                while (i >= 0 && cols[i] == total - k + i) --i;
                if (i < 0) break;
                ++cols[i];
                for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
            }
        } catch (const std::exception& e) {
            if (!failed.exchange(true)) failure = e.what();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& th : pool) th.join();
    if (failed) throw Error("admissible-W search failed: " + failure);
    std::vector<AdmissibleW> out;
    for (auto& f : found)
        for (auto& a : f) out.push_back(std::move(a));
    std::sort(out.begin(), out.end(), [](const AdmissibleW& x, const AdmissibleW& y) { return x.columns < y.columns; });
    return out;
}

MirrorModel intermediate_model(const MirrorModel& bb, const IndexSet& removed) {
    if (removed.empty()) return bb;
    IntMatrix fan = drop_columns(bb.dual_fan_matrix, removed);
    std::vector<IntVector> blocks;
    for (const auto& b : bb.dual_blocks) blocks.push_back(drop_entries(b, removed));
    std::vector<int> origin;
    for (int j = 0; j < static_cast<int>(bb.block_origin.size()); ++j)
        if (!std::binary_search(removed.begin(), removed.end(), j)) origin.push_back(bb.block_origin[j]);
    return model_from(fan, blocks, {origin, bb.monomial_points, std::nullopt});
}

const MirrorModel& MirrorWeb::model(const IndexSet& a) {
    auto it = models.find(a);
    if (it != models.end()) return it->second;
    for (int j : a)
        if (!std::binary_search(iw.begin(), iw.end(), j)) throw Error("subset is not contained in I^W");
    return models.emplace(a, intermediate_model(bb, a)).first->second;
}

std::vector<IndexSet> all_subsets(const IndexSet& s) {
    if (s.size() > 20) throw SizeGuard("I^W has " + std::to_string(s.size()) + " elements; request explicit subsets (lazy mode)");
    std::vector<IndexSet> out;
    for (unsigned long mask = 0; mask < (1ul << s.size()); ++mask) {
        IndexSet a;
        for (size_t i = 0; i < s.size(); ++i)
            if (mask >> i & 1) a.push_back(s[i]);
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end(), [](const IndexSet& x, const IndexSet& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

MirrorWeb build_web(const PartitionedFtv& base, const MirrorModel& bb, const AdmissibleW& w,
                    const std::vector<IndexSet>& subsets, int jobs) {
    MirrorWeb web;
    web.base = base;
    web.bb = bb;
    web.chosen_w = w;
    for (int j = 0; j < bb.dual_fan_matrix.cols(); ++j)
        if (!std::binary_search(w.columns.begin(), w.columns.end(), j)) web.iw.push_back(j);
    for (const auto& a : subsets)
        for (int j : a)
            if (!std::binary_search(web.iw.begin(), web.iw.end(), j)) throw Error("subset is not contained in I^W");

    jobs = std::max(1, jobs);
    std::vector<MirrorModel> built(subsets.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    auto worker = [&] {
        for (size_t i; (i = next++) < subsets.size();) {
            try {
                built[i] = intermediate_model(bb, subsets[i]);
            } catch (const std::exception& e) {
                if (!failed.exchange(true)) failure = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failed) throw Error("model construction failed: " + failure);
    for (size_t i = 0; i < subsets.size(); ++i) web.models.emplace(subsets[i], std::move(built[i]));

    // The LT end of the web must carry W and the c-blocks.
    if (auto it = web.models.find(web.iw); it != web.models.end()) {
        if (it->second.dual_fan_matrix != w.w) throw Error("LT model fan matrix differs from W");
        for (size_t k = 0; k < w.c_blocks.size(); ++k)
            if (it->second.dual_blocks[k] != w.c_blocks[k]) throw Error("LT model framing differs from c");
    }
    return web;
}

WebInvariants web_invariants(const std::vector<AdmissibleW>& admissible, const IndexSet& iw) {
    WebInvariants r;
    for (const auto& a : admissible) {
        if (!a.passes_C) continue;
        ++r.aug_det_multiset[a.aug_det];
        r.torsion.push_back(a.torsion);
        r.anticanonical_degree.push_back(a.q.sum());
    }
    r.model_count = Int(1) << iw.size();
    return r;
}

IntMatrix mpcp_rays(const IntMatrix& fan) { return primitive_points_excluding_origin(convex_hull(fan)); }

}  // namespace toric
