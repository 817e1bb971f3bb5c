#include "gfem/field.hpp"

#include <cmath>
#include <stdexcept>

#include "gfem/basis.hpp"

namespace gfem {

double SolutionField::value(const Vec2& x) const {
    const int e = mesh->locate(x);
    const ElementBasis basis = element_basis(*mesh, *enrichment, e, x);
    const int n_nodes = mesh->n_nodes();
    double u = 0.0;
    for (int k = 0; k < basis.size(); ++k) {
        const int dof = basis.dofs[k];
        u += basis.values[k] * (dof < n_nodes ? ubar[dof] : uprime[dof - n_nodes]);
    }
    return u;
}

Vec2 SolutionField::gradient(const Vec2& x) const {
    const int e = mesh->locate(x);
    const ElementBasis basis = element_basis(*mesh, *enrichment, e, x);
    const int n_nodes = mesh->n_nodes();
    Vec2 g{};
    for (int k = 0; k < basis.size(); ++k) {
        const int dof = basis.dofs[k];
        g = g + (dof < n_nodes ? ubar[dof] : uprime[dof - n_nodes]) * basis.gradients[k];
    }
    return g;
}

double evaluate_solution(const SolutionField& field, const Vec2& x) { return field.value(x); }

double SampledField::value(const Vec2& x) const {
    const Mesh& m = *mesh;
    const int e = m.locate(x);
    const auto& el = m.elements[e];
    if (m.dim == 1) {
        const double a = m.nodes[el[0]].x;
        const double he = m.nodes[el[1]].x - a;
        const double t = (x.x - a) / he;
        // nodal interpolant plus a bubble that is 1 at the center, 0 at the ends
        return nodal[el[0]] * (1.0 - t) + nodal[el[1]] * t + bubble[e] * 4.0 * t * (1.0 - t);
    }
    const Vec2 p0 = m.nodes[el[0]], p2 = m.nodes[el[2]];
    const double t = (x.x - p0.x) / (p2.x - p0.x);
    const double u = (x.y - p0.y) / (p2.y - p0.y);
    const double v = nodal[el[0]] * (1.0 - t) * (1.0 - u) + nodal[el[1]] * t * (1.0 - u) +
                     nodal[el[2]] * t * u + nodal[el[3]] * (1.0 - t) * u;
    return v + bubble[e] * 16.0 * t * (1.0 - t) * u * (1.0 - u);
}

Vec2 SampledField::gradient(const Vec2& x) const {
    const Mesh& m = *mesh;
    const int e = m.locate(x);
    const auto& el = m.elements[e];
    if (m.dim == 1) {
        const double a = m.nodes[el[0]].x;
        const double he = m.nodes[el[1]].x - a;
        const double t = (x.x - a) / he;
        const double g = (nodal[el[1]] - nodal[el[0]]) / he + bubble[e] * 4.0 * (1.0 - 2.0 * t) / he;
        return {g, 0.0};
    }
    const Vec2 p0 = m.nodes[el[0]], p2 = m.nodes[el[2]];
    const double hx = p2.x - p0.x, hy = p2.y - p0.y;
    const double t = (x.x - p0.x) / hx;
    const double u = (x.y - p0.y) / hy;
    const double n0 = nodal[el[0]], n1 = nodal[el[1]], n2 = nodal[el[2]], n3 = nodal[el[3]];
    // bilinear interpolant gradient plus bubble term
    const double dvdx = ((n1 - n0) * (1.0 - u) + (n2 - n3) * u) / hx +
                        bubble[e] * 16.0 * (1.0 - 2.0 * t) * u * (1.0 - u) / hx;
    const double dvdy = ((n3 - n0) * (1.0 - t) + (n2 - n1) * t) / hy +
                        bubble[e] * 16.0 * t * (1.0 - t) * (1.0 - 2.0 * u) / hy;
    return {dvdx, dvdy};
}

SampledField sample_field(const SolutionField& field) {
    SampledField s;
    s.mesh = field.mesh;
    const Mesh& m = *field.mesh;
    s.nodal.resize(m.n_nodes());
    for (int i = 0; i < m.n_nodes(); ++i) s.nodal[i] = field.value(m.nodes[i]);
    s.bubble.resize(m.n_elements());
    for (int e = 0; e < m.n_elements(); ++e) {
        const auto& el = m.elements[e];
        Vec2 center{};
        double interp = 0.0;
        const int n = m.nodes_per_element();
        for (int k = 0; k < n; ++k) {
            center = center + (1.0 / n) * m.nodes[el[k]];
            interp += s.nodal[el[k]] / n;
        }
        s.bubble[e] = field.value(center) - interp;
    }
    return s;
}

}  // namespace gfem
