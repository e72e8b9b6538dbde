#include "toric/ftv.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

IntVector PartitionedFtv::framing() const {
    IntVector a = IntVector::Zero(fan_matrix.cols());
    for (const auto& b : blocks) a += b;
    return a;
}

std::vector<IndexSet> PartitionedFtv::partition() const {
    std::vector<IndexSet> out;
    for (const auto& b : blocks) {
        IndexSet s;
        for (int i = 0; i < b.size(); ++i)
            if (b[i] != 0) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

void PartitionedFtv::validate() const {
    if (fan_matrix.cols() == 0) throw Error("empty fan matrix");
    if (blocks.empty()) throw Error("no framing blocks");
    for (const auto& b : blocks) {
        if (b.size() != fan_matrix.cols()) throw Error("framing block length does not match the fan matrix");
        for (int i = 0; i < b.size(); ++i)
            if (b[i] < 0) throw Error("framing block has a negative entry");
    }
    IntVector a = framing();
    std::vector<int> owners(a.size(), 0);
    for (const auto& s : partition())
        for (int i : s) ++owners[i];
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] <= 0) throw Error("framing is not strictly effective");
        if (owners[i] != 1) throw Error("block supports do not partition the columns");
    }
    if (exact_rank(fan_matrix) != fan_matrix.rows()) throw Error("fan matrix is not of full rank");
    for (Eigen::Index j = 0; j < fan_matrix.cols(); ++j)
        if (!is_primitive(fan_matrix.col(j))) throw Error("fan matrix column is not primitive");
}

int block_delta(const IntVector& block) {
    Int m = 0;
    for (int i = 0; i < block.size(); ++i) m = std::max(m, block[i]);
    return m.convert_to<int>();
}

DualPolytope dual_polytope(const PartitionedFtv& x) {
    struct Entry {
        int block;
        IndexSet key;
        RatVector v;
    };
    DualPolytope dp;
    std::vector<Entry> entries;
    for (size_t k = 0; k < x.blocks.size(); ++k) {
        dp.block_polytopes.push_back(framing_polytope(x.fan_matrix, x.blocks[k]));
        const RatPolytope& p = dp.block_polytopes.back();
        for (const auto& v : p.vertices) {
            IndexSet tight = tight_halfspaces(p, v), loose;
            for (int i = 0; i < static_cast<int>(p.halfspaces.size()); ++i)
                if (!std::binary_search(tight.begin(), tight.end(), i)) loose.push_back(i);
            entries.push_back({static_cast<int>(k), std::move(loose), v});
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.block != b.block ? a.block < b.block : a.key < b.key;
    });
    std::vector<RatVector> all;
    for (const auto& e : entries) all.push_back(e.v);
    RatPolytope hull = convex_hull(all);
    for (const auto& e : entries) {
        bool extreme = std::any_of(hull.vertices.begin(), hull.vertices.end(), [&](const RatVector& h) { return h == e.v; });
        bool seen = std::any_of(dp.vertices.begin(), dp.vertices.end(), [&](const RatVector& h) { return h == e.v; });
        if (!extreme || seen) continue;
        dp.vertices.push_back(e.v);
        dp.origin.push_back(e.block);
        dp.integral = dp.integral && is_integral(e.v);
    }
    return dp;
}

IntVector pairing_block(const IntMatrix& lambda, const IntMatrix& v, const IndexSet& support) {
    IntVector b = IntVector::Zero(lambda.cols());
    if (support.empty()) return b;
    for (Eigen::Index j = 0; j < lambda.cols(); ++j) {
        Int lo = 0;
        bool first = true;
        for (int i : support) {
            Int s = lambda.col(j).dot(v.col(i));
            if (first || s < lo) lo = s;
            first = false;
        }
        b[j] = std::max(Int(0), Int(-lo));
    }
    return b;
}

MirrorModel model_from(const IntMatrix& fan, const std::vector<IntVector>& blocks, const ModelBasis& basis) {
    MirrorModel m;
    m.dual_fan_matrix = fan;
    m.dual_blocks = blocks;
    m.block_origin = basis.origin.empty() ? std::vector<int>(fan.cols(), -1) : basis.origin;
    m.class_group = class_group(fan);
    if (!basis.points.empty() && basis.points.size() != blocks.size())
        throw Error("monomial points do not match the framing blocks");
    const IntMatrix& q = m.class_group.weight_matrix;
    for (size_t k = 0; k < blocks.size(); ++k) {
        const IntVector& b = blocks[k];
        auto pts = basis.points.empty() ? lattice_points(framing_polytope(fan, b)) : basis.points[k];
        IntMatrix e(fan.cols(), pts.size());
        int psi = -1;
        for (size_t c = 0; c < pts.size(); ++c) {
            e.col(c) = fan.transpose() * pts[c] + b;
            if (pts[c].isZero()) psi = static_cast<int>(c);
        }
        for (Eigen::Index i = 0; i < e.size(); ++i)
            if (e.data()[i] < 0) throw Error("negative exponent");
        IntVector deg = q * b;
        for (Eigen::Index c = 0; c < e.cols(); ++c)
            if (IntVector(q * e.col(c)) != deg) throw Error("exponent matrix is not homogeneous");
        m.exponent_matrices.push_back(std::move(e));
        m.monomial_points.push_back(std::move(pts));
        m.psi_column.push_back(psi);
        m.degrees.push_back(deg);
    }
    SpannedFan f = spanned_fan(basis.span ? *basis.span : convex_hull(fan), fan);
    m.irrelevant_ideal = irrelevant_ideal(f);
    return m;
}

std::vector<std::vector<IntVector>> ray_points(const PartitionedFtv& partner) {
    std::vector<std::vector<IntVector>> out;
    for (const auto& s : partner.partition()) {
        std::vector<IntVector> pts;
        for (int i : s) pts.push_back(partner.fan_matrix.col(i));
        pts.push_back(IntVector::Zero(partner.fan_matrix.rows()));
        sort_lex_desc(pts);
        out.push_back(std::move(pts));
    }
    return out;
}

namespace {

IntMatrix lambda_of(const DualPolytope& dp, int n) {
    if (!dp.integral) throw Error("dual polytope is not a lattice polytope");
    std::vector<IntVector> cols;
    for (const auto& v : dp.vertices) cols.push_back(to_int(v));
    return from_columns(cols, n);
}

}  // namespace

MirrorModel f_dual(const PartitionedFtv& x) {
    x.validate();
    for (size_t k = 0; k < x.blocks.size(); ++k)
        if (block_delta(x.blocks[k]) > 1)
            throw UnsupportedRegime("unsupported dual-framing regime (block " + std::to_string(k + 1) +
                                    " has delta = " + std::to_string(block_delta(x.blocks[k])) + ")");
    DualPolytope dp = dual_polytope(x);
    IntMatrix lambda = lambda_of(dp, static_cast<int>(x.fan_matrix.rows()));
    for (Eigen::Index j = 0; j < lambda.cols(); ++j)
        if (!is_primitive(lambda.col(j))) throw Error("dual polytope has a non-primitive vertex " + to_string(IntVector(lambda.col(j))));
    auto parts = x.partition();
    std::vector<IntVector> b;
    for (size_t k = 0; k < x.blocks.size(); ++k) {
        IntVector ind = IntVector::Zero(lambda.cols());
        for (Eigen::Index j = 0; j < lambda.cols(); ++j)
            if (dp.origin[j] == static_cast<int>(k)) ind[j] = 1;
        if (ind != pairing_block(lambda, x.fan_matrix, parts[k]))
            throw Error("block indicator and pairing rule disagree");
        b.push_back(ind);
    }
    return model_from(lambda, b, {dp.origin, {}, std::nullopt});
}

MirrorModel dual_skeleton(const PartitionedFtv& x) {
    x.validate();
    DualPolytope dp = dual_polytope(x);
    const int n = static_cast<int>(x.fan_matrix.rows());
    std::vector<IntVector> rays;
    std::vector<int> origin;
    for (size_t j = 0; j < dp.vertices.size(); ++j) {
        const RatVector& v = dp.vertices[j];
        Int den = 1;
        for (int i = 0; i < n; ++i) den = mp::lcm(den, mp::denominator(v[i]));
        IntVector r(n);
        for (int i = 0; i < n; ++i) r[i] = mp::numerator(v[i] * den);
        r = primitive(r);
        if (std::find(rays.begin(), rays.end(), r) != rays.end()) continue;
        rays.push_back(r);
        origin.push_back(dp.origin[j]);
    }
    IntMatrix lambda = from_columns(rays, n);
    std::vector<IntVector> b;
    for (const auto& s : x.partition()) b.push_back(pairing_block(lambda, x.fan_matrix, s));
    return model_from(lambda, b, {origin, ray_points(x), convex_hull(dp.vertices)});
}

ReverseDual reverse_dual_core(const PartitionedFtv& x) {
    const int n = static_cast<int>(x.fan_matrix.rows());
    std::vector<RatVector> all;
    for (const auto& c : x.blocks) {
        RatPolytope p = framing_polytope(x.fan_matrix, c);
        all.insert(all.end(), p.vertices.begin(), p.vertices.end());
    }
    RatPolytope ip = integer_part(convex_hull(all));
    std::vector<IntVector> rays;
    for (const auto& v : ip.vertices) rays.push_back(primitive(to_int(v)));
    sort_lex_desc(rays);
    rays.erase(std::unique(rays.begin(), rays.end(), [](const IntVector& a, const IntVector& b) { return a == b; }), rays.end());
    ReverseDual r;
    r.fan_matrix = from_columns(rays, n);

    auto parts = x.partition();
    std::vector<std::pair<int, int>> order;  // (smallest support index, source block)
    std::vector<IntVector> blocks;
    for (size_t k = 0; k < parts.size(); ++k) {
        blocks.push_back(pairing_block(r.fan_matrix, x.fan_matrix, parts[k]));
        int first = static_cast<int>(r.fan_matrix.cols());
        for (int j = 0; j < blocks.back().size(); ++j)
            if (blocks.back()[j] != 0) { first = j; break; }
        order.emplace_back(first, static_cast<int>(k));
    }
    std::stable_sort(order.begin(), order.end());
    for (auto [first, k] : order) {
        r.blocks.push_back(blocks[k]);
        r.source_block.push_back(k);
    }
    return r;
}

ReverseDual f_dual_reverse(const PartitionedFtv& x) {
    x.validate();
    WpsTest t = is_fan_matrix_of_wps_quotient(x.fan_matrix);
    if (!t.accepted) throw Error("reverse dual needs a fan matrix of a weighted projective quotient: " + t.reason);
    return reverse_dual_core(x);
}

PartitionedFtv dual_auto(const PartitionedFtv& x) {
    DualPolytope dp = dual_polytope(x);
    if (dp.integral) {
        MirrorModel m = f_dual(x);
        return {m.dual_fan_matrix, m.dual_blocks};
    }
    ReverseDual r = reverse_dual_core(x);
    return {r.fan_matrix, r.blocks};
}

bool same_ftv(const PartitionedFtv& a, const PartitionedFtv& b, bool ordered_blocks) {
    if (!same_columns(a.fan_matrix, b.fan_matrix)) return false;
    const Eigen::Index n = a.fan_matrix.cols();
    std::vector<Eigen::Index> match(n, -1);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            if (b.fan_matrix.col(i) == a.fan_matrix.col(j)) { match[j] = i; break; }
    auto key = [ordered_blocks](std::vector<IntVector> blocks) {
        if (!ordered_blocks) std::sort(blocks.begin(), blocks.end(), [](const IntVector& p, const IntVector& q) { return lex_less(p, q); });
        return blocks;
    };
    std::vector<IntVector> permuted;
    for (const auto& blk : b.blocks) {
        IntVector p(n);
        for (Eigen::Index j = 0; j < n; ++j) p[j] = blk[match[j]];
        permuted.push_back(p);
    }
    auto ka = key(a.blocks), kb = key(permuted);
    if (ka.size() != kb.size()) return false;
    for (size_t i = 0; i < ka.size(); ++i)
        if (ka[i] != kb[i]) return false;
    return true;
}

CalibrationReport check_calibration(const PartitionedFtv& x) {
    CalibrationReport r;
    r.first = dual_auto(x);
    r.second = dual_auto(r.first);
    r.calibrated = same_ftv(x, r.second);
    return r;
}

std::string render_polynomial(const IntMatrix& m, int psi_column) {
    std::ostringstream os;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (c) os << " + ";
        std::vector<std::string> factors;
        if (c == psi_column) factors.push_back("psi");
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            std::string f = "x" + std::to_string(i + 1);
            if (m(i, c) != 1) f += "^" + m(i, c).str();
            factors.push_back(f);
        }
        if (factors.empty()) factors.push_back("1");
        for (size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
    return os.str();
}

std::vector<std::string> render_family(const MirrorModel& m) {
    std::vector<std::string> out;
    for (size_t k = 0; k < m.exponent_matrices.size(); ++k)
        out.push_back(render_polynomial(m.exponent_matrices[k], m.psi_column[k]));
    return out;
}

IntMatrix projective_space_fan(int n) {
    IntMatrix v(n, n + 1);
    v.setZero();
    for (int i = 0; i < n; ++i) {
        v(i, i) = 1;
        v(i, n) = -1;
    }
    return v;
}

DdInput generate_dd_input(int d) {
    if (d < 2) throw Error("d must be at least 2");
    DdInput r;
    r.d = d;
    const int n = 2 * d - 1;
    r.input.fan_matrix = projective_space_fan(n);
    IntVector a1 = IntVector::Zero(2 * d), a2 = IntVector::Zero(2 * d);
    a1.head(d).setOnes();
    a2.tail(d).setOnes();
    r.input.blocks = {a1, a2};

    const Int dd = d;
    IntMatrix id = IntMatrix::Identity(d, d), id1 = IntMatrix::Identity(d - 1, d - 1);
    IntMatrix ones = IntMatrix::Ones(d, d);

    // Δ_{a_1} = [d I_d - 1 | -1 ; 0 | d I_{d-1} 0^T]
    IntMatrix da1 = IntMatrix::Zero(n, 2 * d);
    da1.block(0, 0, d, d) = dd * id - ones;
    da1.block(0, d, d, d) = -ones;
    da1.block(d, d, d - 1, d - 1) = dd * id1;
    // Δ_{a_2} = [d I_d | 0 ; -1 | d I_{d-1} - 1 | -1^T]
    IntMatrix da2 = IntMatrix::Zero(n, 2 * d);
    da2.block(0, 0, d, d) = dd * id;
    da2.block(d, 0, d - 1, d) = -IntMatrix::Ones(d - 1, d);
    da2.block(d, d, d - 1, d - 1) = dd * id1 - IntMatrix::Ones(d - 1, d - 1);
    da2.block(d, 2 * d - 1, d - 1, 1) = -IntMatrix::Ones(d - 1, 1);
    r.lambda.resize(n, 4 * d);
    r.lambda << da1, da2;

    // W = [-1 | d I_d ; d I_{d-1} 0^T | -1], the central 2d columns of Λ.
    r.w = IntMatrix::Zero(n, 2 * d);
    r.w.block(0, 0, d, d) = -ones;
    r.w.block(0, d, d, d) = dd * id;
    r.w.block(d, 0, d - 1, d - 1) = dd * id1;
    r.w.block(d, d, d - 1, d) = -IntMatrix::Ones(d - 1, d);
    for (int j = d; j < 3 * d; ++j) r.w_columns.push_back(j);
    IntVector c1 = IntVector::Zero(2 * d), c2 = IntVector::Zero(2 * d);
    c1.head(d).setOnes();
    c2.tail(d).setOnes();
    r.c_blocks = {c1, c2};

    // M_1 = [d I_d 1^T; 0 1^T; d I_d 0^T; 0 0^T], M_2 = [0 0^T; d I_d 0^T; 0 1^T; d I_d 1^T]
    r.m1 = IntMatrix::Zero(4 * d, d + 1);
    r.m1.block(0, 0, d, d) = dd * id;
    r.m1.block(0, d, 2 * d, 1).setOnes();
    r.m1.block(2 * d, 0, d, d) = dd * id;
    r.m2 = IntMatrix::Zero(4 * d, d + 1);
    r.m2.block(d, 0, d, d) = dd * id;
    r.m2.block(2 * d, d, 2 * d, 1).setOnes();
    r.m2.block(3 * d, 0, d, d) = dd * id;

    // M^∨_1 = [d I_d 0^T; 0 1^T], M^∨_2 = [0 1^T; d I_d 0^T]
    r.lt1 = IntMatrix::Zero(2 * d, d + 1);
    r.lt1.block(0, 0, d, d) = dd * id;
    r.lt1.block(d, d, d, 1).setOnes();
    r.lt2 = IntMatrix::Zero(2 * d, d + 1);
    r.lt2.block(0, d, d, 1).setOnes();
    r.lt2.block(d, 0, d, d) = dd * id;
    return r;
}

}  // namespace toric
