#include "gfem/runner.hpp"

#include <filesystem>
#include <map>

#include "gfem/errors.hpp"
#include "gfem/io.hpp"
#include "gfem/solver.hpp"

namespace gfem {

namespace {

// The 1D model problem (unit interval, constant speed, unit source,
// homogeneous Dirichlet ends) has the closed-form layer solution.
bool has_exact_solution(const ProblemSpec& p) {
    if (p.dim != 1 || p.lx != 1.0 || p.source != 1.0) return false;
    if (p.alpha.kind != AdvectionField::Kind::Constant || p.alpha.value.x == 0.0 ||
        p.alpha.value.y != 0.0)
        return false;
    if (!p.neumann.empty() || p.dirichlet.size() != 2) return false;
    bool inflow = false, outflow = false;
    for (const auto& [tag, u0] : p.dirichlet) {
        if (tag == "inflow" && u0 == 0.0) inflow = true;
        if (tag == "outflow" && u0 == 0.0) outflow = true;
    }
    return inflow && outflow;
}

}  // namespace

RunResult run(const RunConfig& config) {
    validate(config);

    auto mesh = std::make_shared<const Mesh>(
        config.problem.dim == 1 ? build_interval_mesh(config.problem.lx, config.mesh_nx)
                                : build_quad_mesh(config.problem.lx, config.problem.ly,
                                                  config.mesh_nx, config.mesh_ny));
    config.problem.validate(*mesh);

    auto spec = std::make_shared<EnrichmentSpec>();
    spec->family = config.family;
    if (config.family != EnrichmentFamily::None) {
        spec->nodes = select_enriched_nodes(*mesh, config.enrich_tags);
        spec->gamma = config.gamma > 0.0 ? config.gamma : default_gamma(config.problem);
    }

    RunResult result;
    std::optional<ContinuationResult> history;

    if (config.continuation) {
        history = run_continuation(config.problem, mesh, config.plan, config.bc, spec->nodes);
        result.field = history->final_field();
    } else {
        result.field = solve_gfem(config.problem, mesh, spec, config.bc);
    }

    const bool exact_known = has_exact_solution(config.problem);
    double alpha_x = config.problem.alpha.value.x;
    // kappa of the field actually reported (continuation ends at pe_end)
    const double kappa_final = config.continuation ? history->history.back().kappa : config.problem.kappa;
    auto exact = [alpha_x, kappa_final](const Vec2& p) { return exact_1d(alpha_x, kappa_final, p.x); };

    if (exact_known) {
        std::vector<int> line(mesh->n_nodes());
        for (int i = 0; i < mesh->n_nodes(); ++i) line[i] = i;
        result.report = error_report(result.field, exact, line);
    }

    // stage every output before touching the filesystem
    std::map<std::string, std::string> staged;
    staged["solution.csv"] = csv_solution(*mesh, result.field);

    std::vector<Vec2> samples;
    if (mesh->dim == 1) {
        for (int k = 0; k < 200; ++k) samples.push_back({mesh->lx * k / 199.0, 0.0});
    } else if (config.line_y) {
        for (int k = 0; k < 200; ++k) samples.push_back({mesh->lx * k / 199.0, *config.line_y});
    }
    if (!samples.empty()) {
        std::function<double(const Vec2&)> exact_fn = exact;
        staged["line.csv"] = csv_line(result.field, samples, exact_known ? &exact_fn : nullptr);
    }

    if (result.report) staged["error.csv"] = csv_error(*result.report);

    if (mesh->dim == 2) {
        std::vector<double> nodal(mesh->n_nodes());
        for (int i = 0; i < mesh->n_nodes(); ++i) nodal[i] = result.field.value(mesh->nodes[i]);
        staged["field.vtk"] = vtk_unstructured(*mesh, &nodal);
    }

    if (history) {
        std::function<double(const Vec2&, double)> step_exact =
            [alpha_x](const Vec2& p, double kappa) { return exact_1d(alpha_x, kappa, p.x); };
        staged["history.csv"] = csv_history(*history, exact_known ? &step_exact : nullptr);
    }

    if (config.emit_tau) {
        std::vector<TauEntry> entries;
        const EnrichmentSpec& final_spec = *result.field.enrichment;
        ProblemSpec tau_problem = config.problem;
        tau_problem.kappa = kappa_final;
        if (final_spec.family != EnrichmentFamily::None) {
            for (int e = 0; e < mesh->n_elements(); ++e)
                if (element_is_enriched(*mesh, final_spec, e))
                    entries.push_back(compute_tau(tau_problem, *mesh, final_spec, e));
        }
        staged["tau.csv"] = csv_tau(entries);
    }

    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec || !std::filesystem::is_directory(config.out_dir))
        throw IoError("cannot create output directory '" + config.out_dir + "'");

    for (const auto& [name, content] : staged) {
        const std::string path = (std::filesystem::path(config.out_dir) / name).string();
        write_text_file(path, content);
        result.files.push_back(path);
    }
    return result;
}

}  // namespace gfem
