#pragma once

#include <vector>

#include "gfem/mesh.hpp"

namespace gfem {

/// Points and weights on the reference segment [-1,1] or reference quad
/// [-1,1]^2. Weights sum to the reference measure (2 or 4).
struct QuadratureRule {
    std::vector<Vec2> points;  // 1D rules use .x only
    std::vector<double> weights;
    int size() const { return static_cast<int>(points.size()); }
};

/// Gauss-Legendre rule: n points in 1D, an n-by-n tensor product in 2D.
/// Nodes from Newton iteration on the Legendre recurrence (tolerance 1e-15).
/// An n-point rule integrates polynomials of degree <= 2n-1 exactly.
QuadratureRule gauss_rule(int n, int dim);

/// Two-point trapezoidal rule on a physical segment: points at the
/// endpoints, each weighted by half the segment length. Deliberately
/// inexact beyond linears; used for penalty boundary terms.
QuadratureRule trapezoid_boundary_rule(const Vec2& a, const Vec2& b);

}  // namespace gfem
