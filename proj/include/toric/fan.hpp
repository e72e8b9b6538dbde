#pragma once

#include "toric/polytope.hpp"

#include <string>

namespace toric {

struct SpannedFan {
    IntMatrix rays;                   // primitive generators as columns
    std::vector<IndexSet> max_cones;  // one per facet of the spanning polytope
    int dim = 0;
};

// Rays in canonical (lexicographically descending) order.
SpannedFan spanned_fan(const RatPolytope& p);
// Rays indexed by the columns of a given fan matrix (every facet vertex must reduce to one of them).
SpannedFan spanned_fan(const RatPolytope& p, const IntMatrix& ray_order);

// Every ridge lies in exactly two maximal cones and every cone is full-dimensional.
bool is_complete(const SpannedFan& f);

struct MonomialIdeal {
    std::vector<IndexSet> generators;  // squarefree supports, sorted, minimal
};

MonomialIdeal minimalize(std::vector<IndexSet> gens);
MonomialIdeal irrelevant_ideal(const SpannedFan& f);
std::vector<IndexSet> unstable_components(const MonomialIdeal& ideal);

struct WpsTest {
    bool accepted = false;
    std::string reason;
    IntVector q;
    std::vector<Int> torsion;
};
WpsTest is_fan_matrix_of_wps_quotient(const IntMatrix& w);

}  // namespace toric
