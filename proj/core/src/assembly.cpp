#include "gfem/assembly.hpp"

#include <stdexcept>
#include <vector>

#include "gfem/errors.hpp"
#include "gfem/quadrature.hpp"

namespace gfem {

int DofMap::enriched_dof(int node) const {
    auto it = std::lower_bound(enriched_nodes.begin(), enriched_nodes.end(), node);
    if (it == enriched_nodes.end() || *it != node)
        throw std::invalid_argument("DofMap: node " + std::to_string(node) + " is not enriched");
    return n_nodes + static_cast<int>(it - enriched_nodes.begin());
}

namespace {

QuadratureRule select_rule(const Mesh& mesh, const EnrichmentSpec& spec, int element,
                           const AssemblyOptions& options) {
    if (element_is_enriched(mesh, spec, element))
        return gauss_rule(mesh.dim == 1 ? options.gauss_enriched_1d : options.gauss_enriched_2d, mesh.dim);
    return gauss_rule(options.gauss_unenriched, mesh.dim);
}

// Neumann contribution of one boundary face, 2-point Gauss along the face.
void add_neumann_face(const ProblemSpec& problem, const Mesh& mesh, const EnrichmentSpec& spec,
                      const BoundaryFace& face, double flux, Eigen::VectorXd& fe) {
    if (mesh.dim == 1) {
        const Vec2 xb = mesh.nodes[face.nodes[0]];
        const ElementBasis basis = element_basis(mesh, spec, face.element, xb);
        for (int p = 0; p < basis.size(); ++p) fe[p] += basis.values[p] * flux;
        return;
    }
    const Vec2 a = mesh.nodes[face.nodes[0]], b = mesh.nodes[face.nodes[1]];
    const double len = norm(b - a);
    const QuadratureRule line = gauss_rule(2, 1);
    for (int q = 0; q < line.size(); ++q) {
        const double s = 0.5 * (line.points[q].x + 1.0);
        const Vec2 xq = a + s * (b - a);
        const double w = line.weights[q] * 0.5 * len;
        const ElementBasis basis = element_basis(mesh, spec, face.element, xq);
        for (int p = 0; p < basis.size(); ++p) fe[p] += w * basis.values[p] * flux;
    }
    (void)problem;
}

}  // namespace

ElementMatrices element_matrices(const ProblemSpec& problem, const Mesh& mesh,
                                 const EnrichmentSpec& spec, int element,
                                 const AssemblyOptions& options) {
    const QuadratureRule rule = select_rule(mesh, spec, element, options);

    ElementMatrices em;
    bool sized = false;
    for (int q = 0; q < rule.size(); ++q) {
        const MappedPoint mp = map_element(mesh, element, rule.points[q]);
        if (!(mp.det_jacobian > 0.0))
            throw AssemblyError("assembly: element " + std::to_string(element) +
                                " has non-positive Jacobian");
        const ElementBasis basis = combine_basis(mesh, spec, element, mp.shapes, mp.x);
        const int nb = basis.size();
        if (!sized) {
            em.K = Eigen::MatrixXd::Zero(nb, nb);
            em.f = Eigen::VectorXd::Zero(nb);
            em.dofs = basis.dofs;
            sized = true;
        }
        const double w = rule.weights[q] * mp.det_jacobian;
        const Vec2 a = problem.alpha.at(mp.x);
        for (int p = 0; p < nb; ++p) {
            em.f[p] += w * basis.values[p] * problem.source;
            for (int c = 0; c < nb; ++c) {
                em.K(p, c) += w * (basis.values[p] * dot(a, basis.gradients[c]) +
                                   problem.kappa * dot(basis.gradients[p], basis.gradients[c]));
            }
        }
    }

    for (const auto& [tag, flux] : problem.neumann) {
        auto it = mesh.boundary_faces.find(tag);
        if (it == mesh.boundary_faces.end()) continue;  // validated upstream
        for (const BoundaryFace& face : it->second)
            if (face.element == element) add_neumann_face(problem, mesh, spec, face, flux, em.f);
    }
    return em;
}

GlobalSystem assemble(const ProblemSpec& problem, const Mesh& mesh, const EnrichmentSpec& spec,
                      const AssemblyOptions& options) {
    problem.validate(mesh);
    spec.validate();

    GlobalSystem system;
    system.dofmap = DofMap{mesh.n_nodes(), spec.family == EnrichmentFamily::None ? std::vector<int>{} : spec.nodes};
    const int total = system.dofmap.total();
    system.f = Eigen::VectorXd::Zero(total);

    std::vector<Eigen::Triplet<double>> triplets;
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const ElementMatrices em = element_matrices(problem, mesh, spec, e, options);
        const int nb = static_cast<int>(em.dofs.size());
        for (int p = 0; p < nb; ++p) {
            system.f[em.dofs[p]] += em.f[p];
            for (int c = 0; c < nb; ++c) triplets.emplace_back(em.dofs[p], em.dofs[c], em.K(p, c));
        }
    }
    system.K.resize(total, total);
    system.K.setFromTriplets(triplets.begin(), triplets.end());
    system.K.makeCompressed();
    return system;
}

void add_penalty_terms(GlobalSystem& system, const ProblemSpec& problem, const Mesh& mesh,
                       const EnrichmentSpec& spec, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("add_penalty_terms: lambda must be positive");

    for (const auto& [tag, u0] : problem.dirichlet) {
        auto it = mesh.boundary_faces.find(tag);
        if (it == mesh.boundary_faces.end())
            throw std::invalid_argument("add_penalty_terms: unknown Dirichlet tag '" + tag + "'");
        for (const BoundaryFace& face : it->second) {
            QuadratureRule rule;
            if (mesh.dim == 1) {
                rule.points = {mesh.nodes[face.nodes[0]]};
                rule.weights = {1.0};
            } else {
                rule = trapezoid_boundary_rule(mesh.nodes[face.nodes[0]], mesh.nodes[face.nodes[1]]);
            }
            for (int q = 0; q < rule.size(); ++q) {
                const double w = lambda * rule.weights[q];
                const ElementBasis basis = element_basis(mesh, spec, face.element, rule.points[q]);
                for (int p = 0; p < basis.size(); ++p) {
                    system.f[basis.dofs[p]] += w * basis.values[p] * u0;
                    for (int c = 0; c < basis.size(); ++c)
                        system.K.coeffRef(basis.dofs[p], basis.dofs[c]) += w * basis.values[p] * basis.values[c];
                }
            }
        }
    }
    system.K.makeCompressed();
}

}  // namespace gfem
