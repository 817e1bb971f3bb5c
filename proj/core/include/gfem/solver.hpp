#pragma once

#include <memory>

#include "gfem/assembly.hpp"
#include "gfem/field.hpp"

namespace gfem {

/// Dirichlet enforcement: Strong rewrites boundary rows, WeakPenalty adds
/// lambda-weighted boundary mass (trapezoidal) terms. Strong mode requires
/// the active enrichment to vanish on the Dirichlet boundary; Ha does not,
/// so Ha runs must use the penalty.
struct BcMode {
    enum class Kind { Strong, WeakPenalty };
    Kind kind = Kind::Strong;
    double lambda = 0.0;

    static BcMode strong() { return {Kind::Strong, 0.0}; }
    static BcMode weak_penalty(double lambda);
};

/// For every Dirichlet node's standard DOF: row cleared, unit diagonal,
/// rhs set to the prescribed value, and the matching column condensed into
/// the rhs. Enriched DOFs stay free wherever the enrichment vanishes at the
/// boundary node; if |H(x_b)| > 1e-12 the nodal trace ubar + uprime H = u_p
/// only holds with uprime = 0, so that DOF is pinned as well.
void apply_strong_bc(GlobalSystem& system, const Mesh& mesh, const ProblemSpec& problem,
                     const EnrichmentSpec& spec);

/// Direct sparse LU with powers-of-two row/column equilibration. Checks the
/// residual against 1e-10 (1 + |f|) plus the floating-point evaluation floor
/// eps-scaled by |K||u|; a violation, a failed factorization, or non-finite
/// coefficients raise SingularSystemError naming the worst DOF.
SolutionField solve(const GlobalSystem& system, std::shared_ptr<const Mesh> mesh,
                    std::shared_ptr<const EnrichmentSpec> spec);

/// assemble -> (strong BC | penalty terms) -> solve.
SolutionField solve_gfem(const ProblemSpec& problem, std::shared_ptr<const Mesh> mesh,
                         std::shared_ptr<const EnrichmentSpec> spec, const BcMode& bc,
                         const AssemblyOptions& options = {});

}  // namespace gfem
