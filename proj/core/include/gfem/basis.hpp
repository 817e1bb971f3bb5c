#pragma once

#include <vector>

#include "gfem/enrichment.hpp"
#include "gfem/mesh.hpp"

namespace gfem {

/// Standard linear/bilinear shape values and physical gradients at a point.
struct ShapeValues {
    int n = 0;  // 2 per segment, 4 per quad
    std::array<double, 4> values{};
    std::array<Vec2, 4> grads{};
};

/// Geometry of one element evaluated at a reference point: shapes, physical
/// location and the Jacobian determinant of the reference-to-physical map.
struct MappedPoint {
    ShapeValues shapes;
    Vec2 x{};
    double det_jacobian = 0.0;
};

/// Evaluate at a reference point (xi in [-1,1], or [-1,1]^2 for quads).
MappedPoint map_element(const Mesh& mesh, int element, const Vec2& xi);

/// Shape values at a physical point inside the element; throws
/// std::domain_error if x lies outside it. Values are nonnegative and sum
/// to one; gradients are constant per segment, bilinear per quad.
ShapeValues shape_values(const Mesh& mesh, int element, const Vec2& x);

/// Combined element basis row [N_1..N_n, H N_j ...] with one enriched entry
/// per element node in J, ordered standard-then-enriched. dofs holds the
/// global index of each entry (enriched unknowns numbered after all
/// standard ones). Elements without enriched nodes get the standard row.
struct ElementBasis {
    int n_standard = 0;
    std::vector<double> values;
    std::vector<Vec2> gradients;
    std::vector<int> dofs;
    int size() const { return static_cast<int>(values.size()); }
};

ElementBasis element_basis(const Mesh& mesh, const EnrichmentSpec& spec, int element, const Vec2& x);

/// Same combination starting from already-evaluated shapes at physical x;
/// used by assembly loops that iterate reference quadrature points.
ElementBasis combine_basis(const Mesh& mesh, const EnrichmentSpec& spec, int element,
                           const ShapeValues& shapes, const Vec2& x);

/// True if any node of the element belongs to J.
bool element_is_enriched(const Mesh& mesh, const EnrichmentSpec& spec, int element);

}  // namespace gfem
