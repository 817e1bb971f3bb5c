#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gfem/mesh.hpp"

namespace gfem {

/// Advection velocity: a constant vector or the Couette profile
/// alpha(x, y) = (y, 0) of plate-driven shear flow. Both are divergence-free.
struct AdvectionField {
    enum class Kind { Constant, Couette };
    Kind kind = Kind::Constant;
    Vec2 value{1.0, 0.0};  // Constant only

    Vec2 at(const Vec2& p) const { return kind == Kind::Constant ? value : Vec2{p.y, 0.0}; }

    /// Largest speed over the domain; Couette peaks at the top plate y = ly.
    double reference_speed(double ly) const {
        return kind == Kind::Constant ? norm(value) : std::abs(ly);
    }

    static AdvectionField constant(Vec2 v) { return {Kind::Constant, v}; }
    static AdvectionField couette() { return {Kind::Couette, {}}; }
};

/// Steady advection-diffusion problem
///   alpha . grad u - div(kappa grad u) = f   in Omega
///   u = u_p on the Dirichlet part, kappa grad u . n = t_p on the Neumann part.
struct ProblemSpec {
    int dim = 1;
    double lx = 1.0;
    double ly = 1.0;  // ignored in 1D
    AdvectionField alpha;
    double kappa = 1.0;
    double source = 0.0;
    std::vector<std::pair<std::string, double>> dirichlet;  // (boundary tag, u_p)
    std::vector<std::pair<std::string, double>> neumann;    // (boundary tag, t_p)

    /// kappa > 0, tags known to the mesh, Dirichlet and Neumann tags disjoint.
    void validate(const Mesh& mesh) const;
};

}  // namespace gfem
