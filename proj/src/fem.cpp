#include "wcso/fem.hpp"

#include <array>
#include <cmath>

#include "wcso/errors.hpp"

namespace wcso {

namespace {

std::vector<std::vector<std::size_t>> node_adjacency(const StructuredMesh& mesh) {
    std::vector<std::vector<std::size_t>> adj(mesh.node_count());
    for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangle(t);
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                if (a != b) {
                    adj[tri[a]].push_back(tri[b]);
                }
            }
        }
    }
    return adj;
}

// K_ij = (e_i . e_j) / (4A), e_i the edge opposite vertex i.
std::array<std::array<double, 3>, 3> element_stiffness(const StructuredMesh& mesh,
                                                       std::size_t t) {
    const auto& tri = mesh.triangle(t);
    const auto& p0 = mesh.node(tri[0]);
    const auto& p1 = mesh.node(tri[1]);
    const auto& p2 = mesh.node(tri[2]);
    std::array<std::array<double, 2>, 3> e = {{{p2[0] - p1[0], p2[1] - p1[1]},
                                               {p0[0] - p2[0], p0[1] - p2[1]},
                                               {p1[0] - p0[0], p1[1] - p0[1]}}};
    double area = mesh.triangle_area(t);
    std::array<std::array<double, 3>, 3> k{};
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            k[a][b] = (e[a][0] * e[b][0] + e[a][1] * e[b][1]) / (4.0 * area);
        }
    }
    return k;
}

} // namespace

CsrMatrix assemble_stiffness(const StructuredMesh& mesh) {
    CsrMatrix A = CsrMatrix::from_pattern(node_adjacency(mesh));
    for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangle(t);
        auto k = element_stiffness(mesh, t);
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                A.add(tri[a], tri[b], k[a][b]);
            }
        }
    }
    return A;
}

std::vector<double> assemble_lumped_mass(const StructuredMesh& mesh) {
    std::vector<double> w(mesh.node_count(), 0.0);
    for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangle(t);
        double third = mesh.triangle_area(t) / 3.0;
        for (int a = 0; a < 3; ++a) {
            w[tri[a]] += third;
        }
    }
    return w;
}

std::vector<double> assemble_load(const StructuredMesh& mesh, const ScalarField& f) {
    f.check_on(mesh, "load source");
    std::vector<double> load = assemble_lumped_mass(mesh);
    for (std::size_t k = 0; k < load.size(); ++k) {
        load[k] *= f[k];
    }
    return load;
}

DirichletSystem apply_dirichlet(const CsrMatrix& A, const std::vector<double>& b,
                                const std::vector<bool>& boundary_mask) {
    DirichletSystem out{A, b};
    out.matrix.eliminate_rows_cols(boundary_mask);
    for (std::size_t k = 0; k < out.rhs.size(); ++k) {
        if (boundary_mask[k]) {
            out.rhs[k] = 0.0;
        }
    }
    return out;
}

double lp_norm(const StructuredMesh& mesh, const ScalarField& u, double p) {
    u.check_on(mesh, "lp_norm argument");
    if (p < 1.0) {
        throw ValidationError("p", "lp_norm requires p >= 1");
    }
    std::vector<double> w = assemble_lumped_mass(mesh);
    double acc = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        acc += w[k] * std::pow(std::abs(u[k]), p);
    }
    return std::pow(acc, 1.0 / p);
}

double integrate_product(const StructuredMesh& mesh, const ScalarField& u,
                         const ScalarField& v) {
    u.check_on(mesh, "integrate_product u");
    v.check_on(mesh, "integrate_product v");
    std::vector<double> w = assemble_lumped_mass(mesh);
    double acc = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        acc += w[k] * u[k] * v[k];
    }
    return acc;
}

} // namespace wcso
