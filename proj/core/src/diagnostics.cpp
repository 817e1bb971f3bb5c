#include "gfem/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gfem/errors.hpp"
#include "gfem/quadrature.hpp"

namespace gfem {

double exact_1d(double alpha, double kappa, double x) {
    if (!(kappa > 0.0)) throw std::invalid_argument("exact_1d: kappa must be positive");
    if (alpha == 0.0) throw std::invalid_argument("exact_1d: alpha must be nonzero");
    if (x < 0.0 || x > 1.0) throw std::domain_error("exact_1d: x must lie in [0, 1]");
    const double g = alpha / kappa;
    double ratio;  // (1 - e^{gx}) / (1 - e^g)
    if (g <= 30.0) {
        ratio = std::expm1(g * x) / std::expm1(g);
    } else {
        ratio = (std::exp(g * (x - 1.0)) - std::exp(-g)) / (-std::expm1(-g));
    }
    return (x - ratio) / alpha;
}

double element_peclet(double speed, double h, double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("element_peclet: kappa must be positive");
    if (!(h > 0.0)) throw std::invalid_argument("element_peclet: h must be positive");
    return std::abs(speed) * h / (2.0 * kappa);
}

int count_sign_changes(std::span<const double> values) {
    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    const double tol = 1e-12 * std::max(scale, 1e-300);

    int changes = 0;
    int last_sign = 0;
    for (size_t i = 0; i + 1 < values.size(); ++i) {
        const double d = values[i + 1] - values[i];
        if (std::abs(d) <= tol) continue;
        const int s = d > 0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) ++changes;
        last_sign = s;
    }
    return changes;
}

double total_variation(std::span<const double> values) {
    double tv = 0.0;
    for (size_t i = 0; i + 1 < values.size(); ++i) tv += std::abs(values[i + 1] - values[i]);
    return tv;
}

ErrorReport error_report(const SolutionField& field,
                         const std::function<double(const Vec2&)>& exact,
                         const std::vector<int>& line_nodes) {
    if (line_nodes.empty()) throw std::invalid_argument("error_report: empty nodal line");
    const Mesh& mesh = *field.mesh;

    ErrorReport report;

    // L2 by element-wise Gauss quadrature
    const QuadratureRule rule = gauss_rule(mesh.dim == 1 ? 20 : 8, mesh.dim);
    double num = 0.0, den = 0.0;
    for (int e = 0; e < mesh.n_elements(); ++e) {
        for (int q = 0; q < rule.size(); ++q) {
            const MappedPoint mp = map_element(mesh, e, rule.points[q]);
            const double w = rule.weights[q] * mp.det_jacobian;
            const double ue = exact(mp.x);
            const double diff = field.value(mp.x) - ue;
            num += w * diff * diff;
            den += w * ue * ue;
        }
    }
    report.l2_rel = den > 1e-300 ? std::sqrt(num / den) : std::sqrt(num);

    // nodal extrema and errors
    double umin = 0.0, umax = 0.0;
    std::vector<double> nodal(mesh.n_nodes());
    for (int i = 0; i < mesh.n_nodes(); ++i) {
        const double u = field.value(mesh.nodes[i]);
        const double ue = exact(mesh.nodes[i]);
        nodal[i] = u;
        report.linf_nodal = std::max(report.linf_nodal, std::abs(u - ue));
        if (i == 0) { umin = umax = u; }
        umin = std::min(umin, u);
        umax = std::max(umax, u);
    }

    // exact extrema over a fine sample (1D) or the nodes (2D)
    double emin = exact(mesh.nodes[0]), emax = emin;
    if (mesh.dim == 1) {
        for (int k = 0; k <= 2000; ++k) {
            const double ue = exact({k * mesh.lx / 2000.0, 0.0});
            emin = std::min(emin, ue);
            emax = std::max(emax, ue);
        }
    } else {
        for (int i = 0; i < mesh.n_nodes(); ++i) {
            const double ue = exact(mesh.nodes[i]);
            emin = std::min(emin, ue);
            emax = std::max(emax, ue);
        }
    }
    report.overshoot = std::max({0.0, umax - emax, emin - umin});

    std::vector<double> line(line_nodes.size());
    for (size_t k = 0; k < line_nodes.size(); ++k) line[k] = nodal.at(line_nodes[k]);
    report.sign_changes = count_sign_changes(line);
    return report;
}

double TauEntry::value(const Vec2& x) const {
    const ElementBasis basis = element_basis(*mesh, *spec, element, x);
    double tau = 0.0;
    for (int k = basis.n_standard; k < basis.size(); ++k)
        tau += basis.values[k] * weights[k - basis.n_standard];
    return tau;
}

TauEntry compute_tau(const ProblemSpec& problem, const Mesh& mesh, const EnrichmentSpec& spec,
                     int element, const AssemblyOptions& options) {
    if (!element_is_enriched(mesh, spec, element))
        throw std::invalid_argument("compute_tau: element " + std::to_string(element) +
                                    " has no enriched nodes");

    const QuadratureRule rule =
        gauss_rule(mesh.dim == 1 ? options.gauss_enriched_1d : options.gauss_enriched_2d, mesh.dim);

    // count enriched entries from any interior point
    const MappedPoint probe = map_element(mesh, element, {0.0, 0.0});
    const ElementBasis probe_basis = combine_basis(mesh, spec, element, probe.shapes, probe.x);
    const int ne = probe_basis.size() - probe_basis.n_standard;

    Eigen::VectorXd m = Eigen::VectorXd::Zero(ne);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(ne, ne);
    for (int q = 0; q < rule.size(); ++q) {
        const MappedPoint mp = map_element(mesh, element, rule.points[q]);
        const ElementBasis basis = combine_basis(mesh, spec, element, mp.shapes, mp.x);
        const double w = rule.weights[q] * mp.det_jacobian;
        const Vec2 a = problem.alpha.at(mp.x);
        const int off = basis.n_standard;
        for (int p = 0; p < ne; ++p) {
            m[p] += w * basis.values[off + p];
            for (int c = 0; c < ne; ++c)
                D(p, c) += w * (basis.values[off + p] * dot(a, basis.gradients[off + c]) +
                                problem.kappa * dot(basis.gradients[off + p], basis.gradients[off + c]));
        }
    }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(D);
    if (!lu.isInvertible())
        throw DegenerateEnrichmentError("compute_tau: singular enriched subproblem on element " +
                                        std::to_string(element));

    TauEntry entry;
    entry.element = element;
    entry.weights = lu.solve(m);
    entry.mesh = &mesh;
    entry.spec = &spec;

    double integral = 0.0, measure = 0.0;
    for (int q = 0; q < rule.size(); ++q) {
        const MappedPoint mp = map_element(mesh, element, rule.points[q]);
        const ElementBasis basis = combine_basis(mesh, spec, element, mp.shapes, mp.x);
        const double w = rule.weights[q] * mp.det_jacobian;
        double tau = 0.0;
        for (int p = 0; p < ne; ++p) tau += basis.values[basis.n_standard + p] * entry.weights[p];
        integral += w * tau;
        measure += w;
    }
    entry.mean = integral / measure;
    return entry;
}

}  // namespace gfem
