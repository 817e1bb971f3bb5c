#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfem/config.hpp"
#include "gfem/diagnostics.hpp"
#include "gfem/field.hpp"

namespace gfem {

struct RunResult {
    SolutionField field;
    std::optional<ErrorReport> report;  // present when an exact solution is known
    std::vector<std::string> files;
};

/// Execute a configured run and write its outputs (solution CSV, sampled
/// profile CSV, VTK field for 2D, error report and continuation history
/// when applicable, tau table on request). All content is generated before
/// any file is created, so a failing output directory leaves nothing behind.
RunResult run(const RunConfig& config);

}  // namespace gfem
