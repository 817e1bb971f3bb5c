#include "gfem/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gfem {

namespace {

double mesh_h(const Mesh& mesh) { return *std::max_element(mesh.h.begin(), mesh.h.end()); }

double kappa_for_peclet(const ProblemSpec& problem, const Mesh& mesh, double peclet) {
    const double speed = problem.alpha.reference_speed(problem.ly);
    if (!(speed > 0.0)) throw std::invalid_argument("run_continuation: advection speed must be positive");
    return speed * mesh_h(mesh) / (2.0 * peclet);
}

void check_finite(const SolutionField& field, int step) {
    const Mesh& m = *field.mesh;
    // 20 samples per element (interior line in 1D, a 5x4 grid in 2D)
    for (int e = 0; e < m.n_elements(); ++e) {
        if (m.dim == 1) {
            for (int k = 0; k < 20; ++k) {
                const double a = m.nodes[m.elements[e][0]].x;
                const double he = m.nodes[m.elements[e][1]].x - a;
                if (!std::isfinite(field.value({a + (k + 0.5) / 20.0 * he, 0.0})))
                    throw std::runtime_error("continuation step " + std::to_string(step) +
                                             ": non-finite field value");
            }
        } else {
            const Vec2 p0 = m.nodes[m.elements[e][0]], p2 = m.nodes[m.elements[e][2]];
            for (int j = 0; j < 4; ++j)
                for (int i = 0; i < 5; ++i) {
                    const Vec2 x{p0.x + (i + 0.5) / 5.0 * (p2.x - p0.x),
                                 p0.y + (j + 0.5) / 4.0 * (p2.y - p0.y)};
                    if (!std::isfinite(field.value(x)))
                        throw std::runtime_error("continuation step " + std::to_string(step) +
                                                 ": non-finite field value");
                }
        }
    }
}

}  // namespace

ContinuationResult run_continuation(const ProblemSpec& problem, std::shared_ptr<const Mesh> mesh,
                                    const ContinuationPlan& plan, const BcMode& bc,
                                    const std::vector<int>& enriched_nodes,
                                    const AssemblyOptions& options) {
    if (plan.pe_end < plan.pe_start)
        throw std::invalid_argument("run_continuation: pe_end must not be below pe_start");
    if (plan.n_steps < 1) throw std::invalid_argument("run_continuation: n_steps must be >= 1");
    if (!(plan.pe_start > 0.0)) throw std::invalid_argument("run_continuation: pe_start must be positive");

    const double dpe = (plan.pe_end - plan.pe_start) / plan.n_steps;

    ContinuationResult result;
    ProblemSpec step_problem = problem;

    // step 0: plain Galerkin at pe_start
    step_problem.kappa = kappa_for_peclet(problem, *mesh, plan.pe_start);
    auto none = std::make_shared<EnrichmentSpec>();
    SolutionField current;
    try {
        current = solve_gfem(step_problem, mesh, none, bc, options);
    } catch (const std::exception& err) {
        throw std::runtime_error(std::string("continuation step 0: ") + err.what());
    }
    check_finite(current, 0);
    result.history.push_back({plan.pe_start, step_problem.kappa, current});

    for (int i = 1; i <= plan.n_steps; ++i) {
        const double pe = plan.pe_start + i * dpe;
        step_problem.kappa = kappa_for_peclet(problem, *mesh, pe);

        auto spec = std::make_shared<EnrichmentSpec>();
        spec->family = EnrichmentFamily::GlobalLocalField;
        spec->nodes = enriched_nodes;
        spec->carrier = std::make_shared<SampledField>(sample_field(current));
        for (double v : spec->carrier->nodal)
            if (!std::isfinite(v))
                throw std::runtime_error("continuation step " + std::to_string(i) +
                                         ": non-finite enrichment values");

        try {
            current = solve_gfem(step_problem, mesh, spec, bc, options);
        } catch (const std::exception& err) {
            throw std::runtime_error("continuation step " + std::to_string(i) + ": " + err.what());
        }
        check_finite(current, i);
        result.history.push_back({pe, step_problem.kappa, current});
    }
    return result;
}

}  // namespace gfem
