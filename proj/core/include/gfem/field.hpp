#pragma once

#include <memory>
#include <vector>

#include "gfem/enrichment.hpp"
#include "gfem/mesh.hpp"

namespace gfem {

/// Solved coefficients: ubar per node plus uprime per enriched node (in the
/// order of the sorted set J). The coefficients at enriched nodes are not
/// nodal values of u; evaluation always goes through the combined basis.
struct SolutionField {
    std::shared_ptr<const Mesh> mesh;
    std::shared_ptr<const EnrichmentSpec> enrichment;
    std::vector<double> ubar;
    std::vector<double> uprime;

    double value(const Vec2& x) const;
    Vec2 gradient(const Vec2& x) const;
};

/// u(x) = sum_i ubar_i N_i(x) + sum_{j in J} uprime_j N_j(x) H(x).
double evaluate_solution(const SolutionField& field, const Vec2& x);

/// Flattened snapshot of a field on its mesh: nodal values plus one
/// midpoint bubble correction per element. Continuation stores each step
/// this way so that a chain of global-local enrichments never recurses.
struct SampledField {
    std::shared_ptr<const Mesh> mesh;
    std::vector<double> nodal;
    std::vector<double> bubble;  // field minus nodal interpolant at element centers

    double value(const Vec2& x) const;
    Vec2 gradient(const Vec2& x) const;
};

SampledField sample_field(const SolutionField& field);

}  // namespace gfem
