#pragma once

#include "toric/types.hpp"

namespace toric {

// ⟨normal, m⟩ >= -offset
struct Halfspace {
    IntVector normal;
    Int offset;
};

struct RatPolytope {
    int dim = 0;
    std::vector<Halfspace> halfspaces;
    std::vector<RatVector> vertices;  // lexicographically descending
};

// {m : V^T-column pairing ⟨v_i, m⟩ >= -a_i}; errors "fan not complete" when unbounded.
RatPolytope framing_polytope(const IntMatrix& v, const IntVector& a);

// Vertex enumeration for an arbitrary bounded H-representation.
RatPolytope polytope_from_halfspaces(int dim, std::vector<Halfspace> hs);

const std::vector<RatVector>& vertices(const RatPolytope& p);

// Minimal vertex set plus facet H-representation; rejects lower-dimensional input.
RatPolytope convex_hull(const std::vector<RatVector>& points);
RatPolytope convex_hull(const IntMatrix& columns);

bool contains(const RatPolytope& p, const RatVector& x);
bool contains(const RatPolytope& p, const IntVector& x);

// Indices of halfspaces tight at x.
IndexSet tight_halfspaces(const RatPolytope& p, const RatVector& x);

std::vector<IntVector> lattice_points(const RatPolytope& p);  // lexicographically descending
RatPolytope integer_part(const RatPolytope& p);
IntMatrix primitive_points_excluding_origin(const RatPolytope& p);

IntMatrix vertex_matrix(const RatPolytope& p);  // requires integral vertices
void sort_lex_desc(std::vector<RatVector>& pts);
void sort_lex_desc(std::vector<IntVector>& pts);

// Affine dimension of a finite point set.
int affine_dimension(const std::vector<RatVector>& pts);

}  // namespace toric
