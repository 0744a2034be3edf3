#ifndef WCSO_FUNCTIONALS_HPP
#define WCSO_FUNCTIONALS_HPP

#include <random>

#include "wcso/state.hpp"

namespace wcso {

// Worst-case energy with its additive pieces. `value` is the literal sum
// quadratic + potential - linear + norm evaluated at the computed state.
struct FunctionalValue {
    double value = 0.0;
    double quadratic = 0.0; // 1/2 int |grad u|^2
    double potential = 0.0; // 1/2 int V u^2
    double linear = 0.0;    // int f u
    double norm = 0.0;      // delta * |u|_{p'}
};

// E(V, f) = -1/2 int f u, u the linear state for (V, f).
double dirichlet_energy(const StructuredMesh& mesh, const ScalarField& V,
                        const ScalarField& f, const StateConfig& cfg = {});

// Minimum of J(V,u,f) + delta |u|_{p'}; evaluated at the converged
// worst-case state. Equals dirichlet_energy when delta = 0.
FunctionalValue worstcase_energy(const StructuredMesh& mesh, const ScalarField& V,
                                 const ScalarField& f, double delta, double p,
                                 const StateConfig& cfg = {});

// -int f u + delta |u|_2 at the worst-case state (p = 2). Twice the
// worst-case energy by the multiply-by-u-and-integrate identity.
double paper_objective(const StructuredMesh& mesh, const ScalarField& V,
                       const ScalarField& f, double delta, const StateConfig& cfg = {});

// -int f w + delta |w|_{p'} with w the linear state for source h;
// the closed form of the linear worst-case functional (one solve).
double linear_worstcase(const StructuredMesh& mesh, const ScalarField& V,
                        const ScalarField& f, const ScalarField& h, double delta,
                        double p, const StateConfig& cfg = {});

// L1 distance between the torsion states (unit source) of two potentials.
double gamma_distance(const StructuredMesh& mesh, const ScalarField& V1,
                      const ScalarField& V2, const StateConfig& cfg = {});

// Standard normal nodal field rescaled so |g|_p = delta (zero field when the
// sample is degenerate). Used for sampled supremum checks.
ScalarField random_admissible_perturbation(const StructuredMesh& mesh, double p,
                                           double delta, std::mt19937_64& rng);

} // namespace wcso

#endif
