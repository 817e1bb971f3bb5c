#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfem/continuation.hpp"
#include "gfem/enrichment.hpp"
#include "gfem/problem.hpp"
#include "gfem/solver.hpp"

namespace gfem {

/// Everything needed to execute one run: problem, mesh resolution,
/// enrichment selection, boundary-condition mode, optional continuation
/// plan, and output destinations.
struct RunConfig {
    std::string preset_name;

    ProblemSpec problem;
    int mesh_nx = 1;
    int mesh_ny = 1;

    EnrichmentFamily family = EnrichmentFamily::None;
    double gamma = 0.0;  // 0 = derive from speed/kappa
    std::vector<std::string> enrich_tags;

    BcMode bc = BcMode::strong();

    bool continuation = false;
    ContinuationPlan plan;

    std::string out_dir = "out";
    bool emit_tau = false;
    std::optional<double> line_y;  // horizontal cut for 2D profiles

    double mesh_spacing() const { return problem.lx / mesh_nx; }
    /// Element Peclet number at the reference speed.
    double report_peclet() const;
};

/// Built-in experiment presets:
///   ad1d        unit interval, 6 elements, Hb on the last two nodes
///   ad2d_square unit square, 10x10, diagonal flow, Hb2 on the outflow corner
///   ad1d_gl     1D global-local continuation to Pe 3
///   ad2d_gl     2D global-local continuation to Pe 7, penalty BC
///   thermal_bl  Couette-driven thermal boundary layer, Hc, penalty BC
RunConfig preset(const std::string& name);

std::vector<std::string> preset_names();

/// Parse a flat key=value config file ('#' comments). Unknown keys, bad
/// values and schema violations raise ConfigError with the line or key.
RunConfig load_config(const std::string& path);

/// Cross-field checks (mode conflicts, positivity, tag existence).
void validate(const RunConfig& config);

}  // namespace gfem
