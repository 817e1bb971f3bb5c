#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>

#include "gfem/assembly.hpp"
#include "gfem/field.hpp"

namespace gfem {

/// Exact solution of alpha u' - kappa u'' = 1 on the unit interval with
/// u(0) = u(1) = 0:  u(x) = (x - (1 - e^{gx}) / (1 - e^g)) / alpha with
/// g = alpha/kappa, evaluated in overflow-safe form for any g > 0.
double exact_1d(double alpha, double kappa, double x);

/// Element Peclet number ||alpha|| h / (2 kappa).
double element_peclet(double speed, double h, double kappa);

/// Sign alternations of successive differences along a sampled profile.
int count_sign_changes(std::span<const double> values);

double total_variation(std::span<const double> values);

struct ErrorReport {
    double l2_rel = 0.0;      // quadrature L2 of (u - u_exact), relative
    double linf_nodal = 0.0;  // max nodal error
    double overshoot = 0.0;   // excursion beyond the exact extrema
    int sign_changes = 0;     // along the requested nodal line
};

/// line_nodes: node indices of the profile along which oscillations are
/// counted (e.g. all nodes in 1D, one grid row in 2D).
ErrorReport error_report(const SolutionField& field,
                         const std::function<double(const Vec2&)>& exact,
                         const std::vector<int>& line_nodes);

/// Stabilization-parameter diagnostic of the enriched subproblem on one
/// element: with N' the row of enriched basis functions,
///   tau(x) = N'(x) . D^{-1} m,
///   m = int_e N'^T,  D = int_e N'^T alpha . grad N' + kappa grad N'^T grad N'.
/// For a single enriched function this is the scalar quotient form. tau is
/// invariant to rescaling the enrichment.
struct TauEntry {
    int element = -1;
    Eigen::VectorXd weights;  // D^{-1} m
    double mean = 0.0;        // element average of tau
    const Mesh* mesh = nullptr;
    const EnrichmentSpec* spec = nullptr;

    double value(const Vec2& x) const;
};

TauEntry compute_tau(const ProblemSpec& problem, const Mesh& mesh, const EnrichmentSpec& spec,
                     int element, const AssemblyOptions& options = {});

}  // namespace gfem
