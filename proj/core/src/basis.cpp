#include "gfem/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace gfem {

namespace {

constexpr double kRefTol = 1e-10;

// Reference shapes and reference-coordinate gradients for the bilinear quad
// with counterclockwise corners (-1,-1), (1,-1), (1,1), (-1,1).
void quad_ref_shapes(const Vec2& xi, std::array<double, 4>& n, std::array<Vec2, 4>& dn) {
    const double s = xi.x, t = xi.y;
    n = {0.25 * (1 - s) * (1 - t), 0.25 * (1 + s) * (1 - t),
         0.25 * (1 + s) * (1 + t), 0.25 * (1 - s) * (1 + t)};
    dn = {Vec2{-0.25 * (1 - t), -0.25 * (1 - s)}, Vec2{0.25 * (1 - t), -0.25 * (1 + s)},
          Vec2{0.25 * (1 + t), 0.25 * (1 + s)}, Vec2{-0.25 * (1 + t), 0.25 * (1 - s)}};
}

Vec2 quad_map(const Mesh& mesh, int element, const Vec2& xi) {
    std::array<double, 4> n;
    std::array<Vec2, 4> dn;
    quad_ref_shapes(xi, n, dn);
    Vec2 x{};
    for (int k = 0; k < 4; ++k) x = x + n[k] * mesh.nodes[mesh.elements[element][k]];
    return x;
}

// Invert the bilinear map by Newton iteration (exact in one step for
// parallelogram cells). Throws if the point is outside the element.
Vec2 quad_inverse_map(const Mesh& mesh, int element, const Vec2& x) {
    Vec2 xi{0.0, 0.0};
    for (int it = 0; it < 30; ++it) {
        std::array<double, 4> n;
        std::array<Vec2, 4> dn;
        quad_ref_shapes(xi, n, dn);
        Vec2 r{-x.x, -x.y};
        double j11 = 0, j12 = 0, j21 = 0, j22 = 0;
        for (int k = 0; k < 4; ++k) {
            const Vec2& p = mesh.nodes[mesh.elements[element][k]];
            r = r + n[k] * p;
            j11 += dn[k].x * p.x;
            j12 += dn[k].y * p.x;
            j21 += dn[k].x * p.y;
            j22 += dn[k].y * p.y;
        }
        const double det = j11 * j22 - j12 * j21;
        const Vec2 dxi{(j22 * r.x - j12 * r.y) / det, (-j21 * r.x + j11 * r.y) / det};
        xi = xi - dxi;
        if (std::abs(dxi.x) + std::abs(dxi.y) < 1e-14) break;
    }
    if (std::abs(xi.x) > 1.0 + kRefTol || std::abs(xi.y) > 1.0 + kRefTol)
        throw std::domain_error("shape_values: point outside element " + std::to_string(element));
    return xi;
}

}  // namespace

MappedPoint map_element(const Mesh& mesh, int element, const Vec2& xi) {
    MappedPoint mp;
    if (mesh.dim == 1) {
        const auto& el = mesh.elements[element];
        const double a = mesh.nodes[el[0]].x, b = mesh.nodes[el[1]].x;
        const double he = b - a;
        mp.shapes.n = 2;
        mp.shapes.values = {0.5 * (1 - xi.x), 0.5 * (1 + xi.x), 0, 0};
        mp.shapes.grads = {Vec2{-1.0 / he, 0}, Vec2{1.0 / he, 0}, {}, {}};
        mp.x = {a + 0.5 * (xi.x + 1.0) * he, 0.0};
        mp.det_jacobian = 0.5 * he;
        return mp;
    }

    std::array<double, 4> n;
    std::array<Vec2, 4> dn;
    quad_ref_shapes(xi, n, dn);
    double j11 = 0, j12 = 0, j21 = 0, j22 = 0;
    Vec2 x{};
    for (int k = 0; k < 4; ++k) {
        const Vec2& p = mesh.nodes[mesh.elements[element][k]];
        x = x + n[k] * p;
        j11 += dn[k].x * p.x;
        j12 += dn[k].y * p.x;
        j21 += dn[k].x * p.y;
        j22 += dn[k].y * p.y;
    }
    const double det = j11 * j22 - j12 * j21;
    mp.shapes.n = 4;
    mp.shapes.values = n;
    for (int k = 0; k < 4; ++k) {
        // physical gradient: J^{-T} * reference gradient
        mp.shapes.grads[k] = {(j22 * dn[k].x - j21 * dn[k].y) / det,
                              (-j12 * dn[k].x + j11 * dn[k].y) / det};
    }
    mp.x = x;
    mp.det_jacobian = det;
    return mp;
}

ShapeValues shape_values(const Mesh& mesh, int element, const Vec2& x) {
    if (mesh.dim == 1) {
        const auto& el = mesh.elements[element];
        const double a = mesh.nodes[el[0]].x, b = mesh.nodes[el[1]].x;
        const double he = b - a;
        const double xi = 2.0 * (x.x - a) / he - 1.0;
        if (std::abs(xi) > 1.0 + kRefTol)
            throw std::domain_error("shape_values: point outside element " + std::to_string(element));
        return map_element(mesh, element, {xi, 0.0}).shapes;
    }
    const Vec2 xi = quad_inverse_map(mesh, element, x);
    return map_element(mesh, element, xi).shapes;
}

bool element_is_enriched(const Mesh& mesh, const EnrichmentSpec& spec, int element) {
    if (spec.family == EnrichmentFamily::None || spec.nodes.empty()) return false;
    for (int k = 0; k < mesh.nodes_per_element(); ++k)
        if (spec.enriched(mesh.elements[element][k])) return true;
    return false;
}

ElementBasis combine_basis(const Mesh& mesh, const EnrichmentSpec& spec, int element,
                           const ShapeValues& shapes, const Vec2& x) {
    ElementBasis basis;
    const int n = shapes.n;
    basis.n_standard = n;
    basis.values.assign(shapes.values.begin(), shapes.values.begin() + n);
    basis.gradients.assign(shapes.grads.begin(), shapes.grads.begin() + n);
    basis.dofs.resize(n);
    for (int k = 0; k < n; ++k) basis.dofs[k] = mesh.elements[element][k];

    if (!element_is_enriched(mesh, spec, element)) return basis;

    const EnrichmentValue h = eval_enrichment(spec, x);
    const int n_nodes = mesh.n_nodes();
    for (int k = 0; k < n; ++k) {
        const int node = mesh.elements[element][k];
        const int r = spec.rank(node);
        if (r < 0) continue;
        basis.values.push_back(shapes.values[k] * h.value);
        basis.gradients.push_back(h.value * shapes.grads[k] + shapes.values[k] * h.gradient);
        basis.dofs.push_back(n_nodes + r);
    }
    return basis;
}

ElementBasis element_basis(const Mesh& mesh, const EnrichmentSpec& spec, int element, const Vec2& x) {
    return combine_basis(mesh, spec, element, shape_values(mesh, element, x), x);
}

}  // namespace gfem
