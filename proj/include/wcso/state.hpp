#ifndef WCSO_STATE_HPP
#define WCSO_STATE_HPP

#include "wcso/fem.hpp"
#include "wcso/grid.hpp"

namespace wcso {

struct StateConfig {
    double fixed_point_tol = 1e-8;   // relative lumped-L2 change between iterates
    int fixed_point_max_iter = 200;
    double linear_tol = 1e-10;       // inner CG tolerance
    double zero_norm_guard = 0.0;    // 0 means 1e-12 * sqrt(|D|)
    double relaxation = 1.0;         // optional under-relaxation, (0,1]

    void validate() const;
    double guard_for(const StructuredMesh& mesh) const;
};

struct StateSolution {
    ScalarField u;
    int iterations = 0;      // linear solves performed
    bool converged = false;
    double residual = 0.0;   // last relative fixed-point change
};

// Discrete solution of -Lap(u) + V u = rhs with u = 0 on the boundary,
// via lumped-mass reaction term and Jacobi-preconditioned CG.
ScalarField solve_linear_state(const StructuredMesh& mesh, const ScalarField& V,
                               const ScalarField& rhs, const StateConfig& cfg = {});

// Phi(u) = delta * sign(u) |u|^{1/(p-1)} * |u|_{p'}^{-p'/p}, the term that
// turns the state equation into -Lap(u) + V u = f - Phi(u). Returns the zero
// field when |u|_{p'} < eps0 or delta = 0. Satisfies |Phi(u)|_p = delta.
ScalarField nonlinear_rhs_term(const StructuredMesh& mesh, const ScalarField& u,
                               double delta, double p, double eps0);

// Fixed-point iteration for the worst-case state: starts from the delta = 0
// linear solution and refreshes Phi with the previous iterate until the
// relative change drops below cfg.fixed_point_tol.
StateSolution solve_worstcase_state(const StructuredMesh& mesh, const ScalarField& V,
                                    const ScalarField& f, double delta, double p,
                                    const StateConfig& cfg = {});

// Worst admissible source perturbation g = -Phi(u); |g|_p = delta.
// Throws DegenerateState when |u|_{p'} is below the zero guard.
ScalarField worst_perturbation(const StructuredMesh& mesh, const ScalarField& u,
                               double delta, double p);

// |(A + diag(wV))u - load(f - Phi(u))|_2 / |load(f)|_2 on the eliminated
// system; diagnostic for how well u satisfies the nonlinear equation.
double nonlinear_residual(const StructuredMesh& mesh, const ScalarField& V,
                          const ScalarField& f, double delta, double p,
                          const ScalarField& u, const StateConfig& cfg = {});

} // namespace wcso

#endif
