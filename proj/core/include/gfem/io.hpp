#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfem/continuation.hpp"
#include "gfem/diagnostics.hpp"
#include "gfem/field.hpp"
#include "gfem/mesh.hpp"

namespace gfem {

/// Deterministic float formatting: 17 significant digits, '.' decimal.
std::string format_double(double v);

/// node id, coordinates, ubar, uprime (blank when not enriched), u(node).
std::string csv_solution(const Mesh& mesh, const SolutionField& field);

/// Profile sampled at the given points: x, y, u [, u_exact].
std::string csv_line(const SolutionField& field, const std::vector<Vec2>& points,
                     const std::function<double(const Vec2&)>* exact = nullptr);

std::string csv_error(const ErrorReport& report);

/// step, peclet, kappa [, l2_rel] per continuation step.
std::string csv_history(const ContinuationResult& result,
                        const std::function<double(const Vec2&, double kappa)>* exact = nullptr);

/// element, tau_mean, tau at element center.
std::string csv_tau(const std::vector<TauEntry>& entries);

/// Legacy-ASCII VTK unstructured grid; point_data optional nodal scalars.
std::string vtk_unstructured(const Mesh& mesh, const std::vector<double>* point_data,
                             const std::string& field_name = "u");

/// Write whole file or throw IoError naming the path.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gfem
