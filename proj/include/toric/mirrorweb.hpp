#pragma once

#include "toric/ftv.hpp"

#include <map>
#include <optional>

namespace toric {

struct BlockCheck {
    int m = 0;      // support size
    int delta = 0;  // last nonzero entry
    bool pass = false;
};
// Throws when a block is not of the form (0..0, 1..1, δ, 0..0).
std::vector<BlockCheck> check_assumption_A(const PartitionedFtv& x);

struct AdmissibleW {
    IndexSet columns;  // 0-based columns of Λ
    IntMatrix w;
    IntVector q;
    std::vector<Int> torsion;
    std::vector<IntVector> c_blocks;
    Int aug_det;
    bool passes_C = false;
};

// Quick (B) screen: the n+1 signed maximal minors are nonzero and share one sign.
bool passes_assumption_B(const IntMatrix& w);

// Full evaluation of a column list; nullopt when (B) fails.
std::optional<AdmissibleW> evaluate_W(const PartitionedFtv& base, const IntMatrix& lambda,
                                      const std::vector<IntVector>& b, const IndexSet& columns);
// Same, with explicitly given c-blocks instead of the restriction of b.
std::optional<AdmissibleW> evaluate_W(const PartitionedFtv& base, const IntMatrix& lambda, const IndexSet& columns,
                                      const std::vector<IntVector>& c_blocks);

bool passes_assumption_C(const PartitionedFtv& base, const IntMatrix& w, const std::vector<IntVector>& c_blocks);

// Every (n+1)-column list of Λ passing (B), with its (C) verdict; ordered by column list.
std::vector<AdmissibleW> find_admissible_W(const PartitionedFtv& base, const IntMatrix& lambda,
                                           const std::vector<IntVector>& b, int jobs = 1);

MirrorModel intermediate_model(const MirrorModel& bb, const IndexSet& removed);

struct MirrorWeb {
    PartitionedFtv base;
    MirrorModel bb;
    AdmissibleW chosen_w;
    IndexSet iw;  // columns of Λ not in W
    std::map<IndexSet, MirrorModel> models;

    const MirrorModel& model(const IndexSet& a);  // built on first request
};

struct SizeGuard : Error {
    using Error::Error;
};

MirrorWeb build_web(const PartitionedFtv& base, const MirrorModel& bb, const AdmissibleW& w,
                    const std::vector<IndexSet>& subsets, int jobs = 1);
std::vector<IndexSet> all_subsets(const IndexSet& s);  // SizeGuard beyond 20 elements

struct WebInvariants {
    std::map<Int, int> aug_det_multiset;  // over (C)-passing lists
    std::vector<std::vector<Int>> torsion;
    std::vector<Int> anticanonical_degree;  // |q|
    Int model_count;                        // 2^|I^W|
};
WebInvariants web_invariants(const std::vector<AdmissibleW>& admissible, const IndexSet& iw);

IntMatrix mpcp_rays(const IntMatrix& fan);

}  // namespace toric
