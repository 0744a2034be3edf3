#ifndef WCSO_FEM_HPP
#define WCSO_FEM_HPP

#include <vector>

#include "wcso/csr_matrix.hpp"
#include "wcso/grid.hpp"

namespace wcso {

// P1 stiffness matrix, symmetric PSD, constants in the kernel before
// boundary elimination. On square cells the interior stencil is the
// classical 5-point one (diagonal 4, -1 to axis neighbors).
CsrMatrix assemble_stiffness(const StructuredMesh& mesh);

// Lumped mass: weight_i = 1/3 of the area of the triangles touching node i.
// These weights are the single quadrature rule used project-wide.
std::vector<double> assemble_lumped_mass(const StructuredMesh& mesh);

// load_i = weight_i * f_i.
std::vector<double> assemble_load(const StructuredMesh& mesh, const ScalarField& f);

struct DirichletSystem {
    CsrMatrix matrix;
    std::vector<double> rhs;
};

// Symmetric row/column elimination of the flagged nodes with unit diagonal
// and zero right-hand side there (homogeneous Dirichlet data).
DirichletSystem apply_dirichlet(const CsrMatrix& A, const std::vector<double>& b,
                                const std::vector<bool>& boundary_mask);

// Lumped-quadrature L^p norm, p >= 1.
double lp_norm(const StructuredMesh& mesh, const ScalarField& u, double p);

// Lumped-quadrature integral of u*v over the mesh.
double integrate_product(const StructuredMesh& mesh, const ScalarField& u,
                         const ScalarField& v);

} // namespace wcso

#endif
