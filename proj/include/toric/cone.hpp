#pragma once

#include "toric/types.hpp"

namespace toric {

// Extreme rays of the pointed cone {x : A·x >= 0} by double description.
// Rays are primitive integer vectors. Throws if A has rank < cols (cone not pointed).
std::vector<IntVector> extreme_rays(const IntMatrix& a);

// Exact feasibility of {x >= 0 : A·x = b} (phase-one simplex, Bland's rule).
bool lp_feasible(const RatMatrix& a, const RatVector& b);

// Is p a convex combination of pts?
bool in_convex_hull(const RatVector& p, const std::vector<RatVector>& pts);

}  // namespace toric
