#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "gfem/basis.hpp"
#include "gfem/enrichment.hpp"
#include "gfem/mesh.hpp"
#include "gfem/problem.hpp"

namespace gfem {

/// Global unknown numbering: one standard DOF per node, then one enriched
/// DOF per node of J appended after all standard DOFs.
struct DofMap {
    int n_nodes = 0;
    std::vector<int> enriched_nodes;  // sorted

    int total() const { return n_nodes + static_cast<int>(enriched_nodes.size()); }
    int standard_dof(int node) const { return node; }
    int enriched_dof(int node) const;
};

/// Assembled K u = f. With pure diffusion and no boundary terms the
/// interior standard block of K is symmetric; the advection block is not.
struct GlobalSystem {
    Eigen::SparseMatrix<double, Eigen::RowMajor> K;
    Eigen::VectorXd f;
    DofMap dofmap;
};

/// Quadrature selection: elements with at least one enriched node take the
/// high-order rule (100 points per segment; 30x30 per quad, where a full
/// 100x100 product would cost 10^4 points for no observable change);
/// everything else takes 2-point (2x2) Gauss.
struct AssemblyOptions {
    int gauss_unenriched = 2;
    int gauss_enriched_1d = 100;
    int gauss_enriched_2d = 30;
};

struct ElementMatrices {
    Eigen::MatrixXd K;
    Eigen::VectorXd f;
    std::vector<int> dofs;
};

/// K_e[p][q] = int_e B_p (alpha . grad B_q) + grad B_p . kappa grad B_q,
/// f_e[p] = int_e B_p f plus any Neumann face terms of this element.
ElementMatrices element_matrices(const ProblemSpec& problem, const Mesh& mesh,
                                 const EnrichmentSpec& spec, int element,
                                 const AssemblyOptions& options = {});

GlobalSystem assemble(const ProblemSpec& problem, const Mesh& mesh, const EnrichmentSpec& spec,
                      const AssemblyOptions& options = {});

/// Penalty enforcement of Dirichlet data: adds lambda int_Gu B_p B_q dG to K
/// and lambda int_Gu B_p u_p dG to f, with 2-point trapezoidal integration
/// on edges; 1D boundary "faces" are points with unit weight.
void add_penalty_terms(GlobalSystem& system, const ProblemSpec& problem, const Mesh& mesh,
                       const EnrichmentSpec& spec, double lambda);

}  // namespace gfem
