#pragma once

#include <memory>
#include <vector>

#include "gfem/solver.hpp"

namespace gfem {

/// March of the element Peclet number from pe_start to pe_end in n_steps
/// equal increments. The Peclet number is realized by scaling kappa with
/// the advection field and mesh held fixed.
struct ContinuationPlan {
    double pe_start = 1.0;
    double pe_end = 1.0;
    int n_steps = 8;
};

struct ContinuationStep {
    double peclet = 0.0;
    double kappa = 0.0;
    SolutionField field;
};

struct ContinuationResult {
    std::vector<ContinuationStep> history;  // n_steps + 1 entries
    const SolutionField& final_field() const { return history.back().field; }
};

/// Step 0 solves the plain Galerkin problem at pe_start; every later step
/// solves the enriched problem with the previous solution (stored as a
/// flattened sampled field) as the enrichment over the given node set.
/// A failed or non-finite step aborts with the step index in the message.
ContinuationResult run_continuation(const ProblemSpec& problem, std::shared_ptr<const Mesh> mesh,
                                    const ContinuationPlan& plan, const BcMode& bc,
                                    const std::vector<int>& enriched_nodes,
                                    const AssemblyOptions& options = {});

}  // namespace gfem
