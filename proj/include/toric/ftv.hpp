#pragma once

#include "toric/fan.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"

#include <optional>
#include <string>

namespace toric {

struct UnsupportedRegime : Error {
    using Error::Error;
};

struct PartitionedFtv {
    IntMatrix fan_matrix;
    std::vector<IntVector> blocks;

    IntVector framing() const;
    std::vector<IndexSet> partition() const;  // supports of the blocks
    void validate() const;                    // throws on broken invariants
};

int block_delta(const IntVector& block);  // largest entry

struct MirrorModel {
    IntMatrix dual_fan_matrix;
    std::vector<IntVector> dual_blocks;
    std::vector<int> block_origin;  // per column: contributing block, -1 when not applicable
    std::vector<IntMatrix> exponent_matrices;
    std::vector<std::vector<IntVector>> monomial_points;  // per block: the m of each M_k column
    std::vector<int> psi_column;    // column of M_k at lattice point 0, -1 if absent
    MonomialIdeal irrelevant_ideal;
    ClassGroupData class_group;
    std::vector<IntVector> degrees;
};

// Δ_{a_k}, Δ = conv(∪ Δ_{a_k}) and its vertices in block order.
struct DualPolytope {
    std::vector<RatPolytope> block_polytopes;
    std::vector<RatVector> vertices;  // grouped by block, then by the halfspaces not tight at the vertex
    std::vector<int> origin;
    bool integral = true;
};
DualPolytope dual_polytope(const PartitionedFtv& x);

// b_{k,j} = max(0, -min_{i in support} ⟨λ_j, v_i⟩)
IntVector pairing_block(const IntMatrix& lambda, const IntMatrix& v, const IndexSet& support);

struct ModelBasis {
    std::vector<int> origin;
    std::vector<std::vector<IntVector>> points;  // empty: all lattice points of each Δ_{b_k}
    std::optional<RatPolytope> span;            // polytope spanning the fan; default conv(fan columns)
};

// Exponent matrices, ideal and class group for a fan matrix with framing blocks.
MirrorModel model_from(const IntMatrix& fan, const std::vector<IntVector>& blocks, const ModelBasis& basis = {});

// Per block: the partner's rays in the block support, plus the origin (lexicographically descending).
std::vector<std::vector<IntVector>> ray_points(const PartitionedFtv& partner);

MirrorModel f_dual(const PartitionedFtv& x);
// Same construction with the pairing rule for every block and no δ gate: Λ is made of the
// primitive reductions of the vertices of Δ, and the monomials of block k come from the input
// rays of that block.
MirrorModel dual_skeleton(const PartitionedFtv& x);

struct ReverseDual {
    IntMatrix fan_matrix;
    std::vector<IntVector> blocks;
    std::vector<int> source_block;  // input block each dual block was computed from
};
ReverseDual f_dual_reverse(const PartitionedFtv& x);
ReverseDual reverse_dual_core(const PartitionedFtv& x);  // no WPS precondition

// One f-duality step in the direction the data allows (forward if Δ is a lattice polytope).
PartitionedFtv dual_auto(const PartitionedFtv& x);

// Same fan-matrix columns and the same blocks under the induced column matching
// (as a set of blocks, or position by position when ordered_blocks is set).
bool same_ftv(const PartitionedFtv& a, const PartitionedFtv& b, bool ordered_blocks = false);

struct CalibrationReport {
    bool calibrated = false;
    PartitionedFtv first;
    PartitionedFtv second;
};
CalibrationReport check_calibration(const PartitionedFtv& x);

std::string render_polynomial(const IntMatrix& m, int psi_column);
std::vector<std::string> render_family(const MirrorModel& m);

struct DdInput {
    int d = 0;
    PartitionedFtv input;
    IntMatrix lambda;
    IntMatrix w;
    IndexSet w_columns;  // 0-based columns of Λ forming W
    std::vector<IntVector> c_blocks;
    IntMatrix m1, m2;    // BB exponent matrices
    IntMatrix lt1, lt2;  // LT exponent matrices
};
DdInput generate_dd_input(int d);

IntMatrix projective_space_fan(int n);  // [I_n | -1]

}  // namespace toric
