#include "wcso/state.hpp"

#include <cmath>
#include <string>

#include "wcso/errors.hpp"

namespace wcso {

namespace {

void check_potential(const StructuredMesh& mesh, const ScalarField& V) {
    V.check_on(mesh, "potential");
    for (std::size_t k = 0; k < V.size(); ++k) {
        if (V[k] < 0.0) {
            throw ValidationError("potential", "V must be nonnegative, node " + std::to_string(k));
        }
    }
}

void check_exponent(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw ValidationError("p", "exponent must lie in (1, inf)");
    }
}

// One assembled operator reused across fixed-point iterations.
struct PotentialOperator {
    CsrMatrix matrix;               // A + diag(w V), boundary-eliminated
    std::vector<double> weights;    // lumped mass
    const StructuredMesh* mesh;

    PotentialOperator(const StructuredMesh& m, const ScalarField& V) : mesh(&m) {
        weights = assemble_lumped_mass(m);
        matrix = assemble_stiffness(m);
        std::vector<double> reaction(weights);
        for (std::size_t k = 0; k < reaction.size(); ++k) {
            reaction[k] *= V[k];
        }
        matrix.add_to_diagonal(reaction);
        matrix.eliminate_rows_cols(m.boundary_mask());
    }

    // Solves for the nodal source `rhs`; `x` carries the initial guess.
    void solve(const ScalarField& rhs, ScalarField& x, double tol) const {
        std::vector<double> b(weights);
        for (std::size_t k = 0; k < b.size(); ++k) {
            b[k] *= rhs[k];
            if (mesh->is_boundary(k)) {
                b[k] = 0.0;
            }
        }
        cg_solve(matrix, b, x.values(), {.tol = tol});
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (mesh->is_boundary(k)) {
                x[k] = 0.0;
            }
        }
    }

    double weighted_norm2(const ScalarField& u) const {
        double acc = 0.0;
        for (std::size_t k = 0; k < weights.size(); ++k) {
            acc += weights[k] * u[k] * u[k];
        }
        return std::sqrt(acc);
    }

    double weighted_norm(const ScalarField& u, double q) const {
        double acc = 0.0;
        for (std::size_t k = 0; k < weights.size(); ++k) {
            acc += weights[k] * std::pow(std::abs(u[k]), q);
        }
        return std::pow(acc, 1.0 / q);
    }
};

bool all_zero(const ScalarField& f) {
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] != 0.0) {
            return false;
        }
    }
    return true;
}

} // namespace

void StateConfig::validate() const {
    if (fixed_point_tol <= 0.0 || linear_tol <= 0.0) {
        throw ValidationError("state tolerances", "must be positive");
    }
    if (fixed_point_max_iter < 1) {
        throw ValidationError("fixed_point_max_iter", "must be at least 1");
    }
    if (!(relaxation > 0.0) || relaxation > 1.0) {
        throw ValidationError("relaxation", "must lie in (0, 1]");
    }
    if (zero_norm_guard < 0.0) {
        throw ValidationError("zero_norm_guard", "must be nonnegative");
    }
}

double StateConfig::guard_for(const StructuredMesh& mesh) const {
    return zero_norm_guard > 0.0 ? zero_norm_guard
                                 : 1e-12 * std::sqrt(mesh.domain().area());
}

ScalarField solve_linear_state(const StructuredMesh& mesh, const ScalarField& V,
                               const ScalarField& rhs, const StateConfig& cfg) {
    cfg.validate();
    check_potential(mesh, V);
    rhs.check_on(mesh, "rhs");
    PotentialOperator op(mesh, V);
    ScalarField u(mesh);
    op.solve(rhs, u, cfg.linear_tol);
    return u;
}

ScalarField nonlinear_rhs_term(const StructuredMesh& mesh, const ScalarField& u,
                               double delta, double p, double eps0) {
    u.check_on(mesh, "state");
    check_exponent(p);
    if (delta < 0.0) {
        throw ValidationError("delta", "must be nonnegative");
    }
    ScalarField phi(mesh);
    if (delta == 0.0) {
        return phi;
    }
    double pc = p / (p - 1.0);
    double norm = lp_norm(mesh, u, pc);
    if (norm < eps0) {
        return phi;
    }
    double scale = delta * std::pow(norm, -pc / p);
    double expo = 1.0 / (p - 1.0);
    for (std::size_t k = 0; k < u.size(); ++k) {
        double s = u[k] >= 0.0 ? 1.0 : -1.0;
        phi[k] = scale * s * std::pow(std::abs(u[k]), expo);
    }
    return phi;
}

StateSolution solve_worstcase_state(const StructuredMesh& mesh, const ScalarField& V,
                                    const ScalarField& f, double delta, double p,
                                    const StateConfig& cfg) {
    cfg.validate();
    check_potential(mesh, V);
    f.check_on(mesh, "source");
    check_exponent(p);
    if (delta < 0.0) {
        throw ValidationError("delta", "must be nonnegative");
    }

    PotentialOperator op(mesh, V);
    double eps0 = cfg.guard_for(mesh);
    double pc = p / (p - 1.0);

    StateSolution sol;
    sol.u = ScalarField(mesh);
    op.solve(f, sol.u, cfg.linear_tol);
    sol.iterations = 1;
    if (delta == 0.0) {
        sol.converged = true;
        sol.residual = 0.0;
        return sol;
    }

    ScalarField prev = sol.u;
    ScalarField effective(mesh);
    for (int k = 0; k < cfg.fixed_point_max_iter; ++k) {
        if (op.weighted_norm(prev, pc) < eps0) {
            if (all_zero(f)) {
                // Zero is a fixed point of the guarded map.
                sol.converged = true;
                sol.residual = 0.0;
                return sol;
            }
            throw DegenerateState("worst-case state collapsed below the zero guard");
        }
        ScalarField phi = nonlinear_rhs_term(mesh, prev, delta, p, eps0);
        for (std::size_t i = 0; i < effective.size(); ++i) {
            effective[i] = f[i] - phi[i];
        }
        ScalarField next = prev; // warm start
        op.solve(effective, next, cfg.linear_tol);
        if (cfg.relaxation < 1.0) {
            for (std::size_t i = 0; i < next.size(); ++i) {
                next[i] = cfg.relaxation * next[i] + (1.0 - cfg.relaxation) * prev[i];
            }
        }
        ++sol.iterations;

        ScalarField diff = next;
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] -= prev[i];
        }
        double change = op.weighted_norm2(diff) / std::max(op.weighted_norm2(prev), eps0);
        sol.u = next;
        sol.residual = change;
        if (change <= cfg.fixed_point_tol) {
            sol.converged = true;
            return sol;
        }
        prev = next;
    }
    sol.converged = false;
    return sol;
}

ScalarField worst_perturbation(const StructuredMesh& mesh, const ScalarField& u,
                               double delta, double p) {
    check_exponent(p);
    StateConfig cfg;
    double eps0 = cfg.guard_for(mesh);
    double pc = p / (p - 1.0);
    if (lp_norm(mesh, u, pc) <= eps0) {
        throw DegenerateState("worst_perturbation: state norm below the zero guard");
    }
    ScalarField g = nonlinear_rhs_term(mesh, u, delta, p, eps0);
    for (std::size_t k = 0; k < g.size(); ++k) {
        g[k] = -g[k];
    }
    return g;
}

double nonlinear_residual(const StructuredMesh& mesh, const ScalarField& V,
                          const ScalarField& f, double delta, double p,
                          const ScalarField& u, const StateConfig& cfg) {
    PotentialOperator op(mesh, V);
    ScalarField phi = nonlinear_rhs_term(mesh, u, delta, p, cfg.guard_for(mesh));
    std::vector<double> lhs(mesh.node_count());
    op.matrix.multiply(u.values(), lhs);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        double b = mesh.is_boundary(k) ? 0.0 : op.weights[k] * (f[k] - phi[k]);
        double bf = mesh.is_boundary(k) ? 0.0 : op.weights[k] * f[k];
        double r = lhs[k] - b;
        num += r * r;
        den += bf * bf;
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

} // namespace wcso
