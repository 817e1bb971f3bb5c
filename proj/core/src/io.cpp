#include "gfem/io.hpp"

#include <cstdio>
#include <fstream>

#include "gfem/errors.hpp"

namespace gfem {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_solution(const Mesh& mesh, const SolutionField& field) {
    std::string out = "node,x,y,ubar,uprime,u\n";
    const EnrichmentSpec& spec = *field.enrichment;
    for (int i = 0; i < mesh.n_nodes(); ++i) {
        const int r = spec.rank(i);
        out += std::to_string(i) + ',' + format_double(mesh.nodes[i].x) + ',' +
               format_double(mesh.nodes[i].y) + ',' + format_double(field.ubar[i]) + ',' +
               (r >= 0 ? format_double(field.uprime[r]) : std::string()) + ',' +
               format_double(field.value(mesh.nodes[i])) + '\n';
    }
    return out;
}

std::string csv_line(const SolutionField& field, const std::vector<Vec2>& points,
                     const std::function<double(const Vec2&)>* exact) {
    std::string out = exact ? "x,y,u,u_exact\n" : "x,y,u\n";
    for (const Vec2& p : points) {
        out += format_double(p.x) + ',' + format_double(p.y) + ',' + format_double(field.value(p));
        if (exact) out += ',' + format_double((*exact)(p));
        out += '\n';
    }
    return out;
}

std::string csv_error(const ErrorReport& report) {
    std::string out = "l2_rel,linf_nodal,overshoot,sign_changes\n";
    out += format_double(report.l2_rel) + ',' + format_double(report.linf_nodal) + ',' +
           format_double(report.overshoot) + ',' + std::to_string(report.sign_changes) + '\n';
    return out;
}

std::string csv_history(const ContinuationResult& result,
                        const std::function<double(const Vec2&, double)>* exact) {
    std::string out = exact ? "step,peclet,kappa,l2_rel\n" : "step,peclet,kappa\n";
    for (size_t i = 0; i < result.history.size(); ++i) {
        const ContinuationStep& step = result.history[i];
        out += std::to_string(i) + ',' + format_double(step.peclet) + ',' + format_double(step.kappa);
        if (exact) {
            auto fn = [&](const Vec2& p) { return (*exact)(p, step.kappa); };
            const Mesh& mesh = *step.field.mesh;
            std::vector<int> line(mesh.n_nodes());
            for (int k = 0; k < mesh.n_nodes(); ++k) line[k] = k;
            out += ',' + format_double(error_report(step.field, fn, line).l2_rel);
        }
        out += '\n';
    }
    return out;
}

std::string csv_tau(const std::vector<TauEntry>& entries) {
    std::string out = "element,tau_mean,tau_center\n";
    for (const TauEntry& entry : entries) {
        const Mesh& mesh = *entry.mesh;
        Vec2 center{};
        const int n = mesh.nodes_per_element();
        for (int k = 0; k < n; ++k)
            center = center + (1.0 / n) * mesh.nodes[mesh.elements[entry.element][k]];
        out += std::to_string(entry.element) + ',' + format_double(entry.mean) + ',' +
               format_double(entry.value(center)) + '\n';
    }
    return out;
}

std::string vtk_unstructured(const Mesh& mesh, const std::vector<double>* point_data,
                             const std::string& field_name) {
    std::string out;
    out += "# vtk DataFile Version 3.0\n";
    out += "gfemad field\n";
    out += "ASCII\n";
    out += "DATASET UNSTRUCTURED_GRID\n";
    out += "POINTS " + std::to_string(mesh.n_nodes()) + " double\n";
    for (const Vec2& p : mesh.nodes)
        out += format_double(p.x) + ' ' + format_double(p.y) + " 0\n";

    const int npe = mesh.nodes_per_element();
    out += "CELLS " + std::to_string(mesh.n_elements()) + ' ' +
           std::to_string(mesh.n_elements() * (npe + 1)) + '\n';
    for (int e = 0; e < mesh.n_elements(); ++e) {
        out += std::to_string(npe);
        for (int k = 0; k < npe; ++k) out += ' ' + std::to_string(mesh.elements[e][k]);
        out += '\n';
    }
    out += "CELL_TYPES " + std::to_string(mesh.n_elements()) + '\n';
    for (int e = 0; e < mesh.n_elements(); ++e) out += mesh.dim == 1 ? "3\n" : "9\n";  // line / quad

    if (point_data) {
        out += "POINT_DATA " + std::to_string(mesh.n_nodes()) + '\n';
        out += "SCALARS " + field_name + " double 1\n";
        out += "LOOKUP_TABLE default\n";
        for (double v : *point_data) out += format_double(v) + '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) throw IoError("cannot open '" + path + "' for writing");
    stream << content;
    if (!stream) throw IoError("failed writing '" + path + "'");
}

}  // namespace gfem
