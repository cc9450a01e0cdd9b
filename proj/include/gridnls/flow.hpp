#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace gridnls {

using Vec = std::vector<double>;

// Constrained energy seen by the solver: a value, a lumped-L2 gradient, the
// lumped inner product, an optional frozen-DOF mask (Dirichlet truncation)
// and a family of localized starting guesses.
class EnergyModel {
public:
    virtual ~EnergyModel() = default;
    virtual double energy(const Vec& u) const = 0;
    virtual void gradient(const Vec& u, Vec& g) const = 0;
    virtual double inner(const Vec& a, const Vec& b) const = 0;
    virtual std::size_t size() const = 0;
    // Zeroes DOF held at homogeneous Dirichlet values by the truncation.
    virtual void apply_constraints(Vec&) const {}
    // Localized init number `start` (Gaussian bumps at distinct centers).
    virtual Vec initial_guess(int start, double mu) const = 0;

    double mass(const Vec& u) const { return inner(u, u); }
};

struct SolveConfig {
    double step0 = 1.0;
    double shrink = 0.5;          // in (0,1)
    double grow = 1.3;            // > 1
    double grad_tol = 1e-7;       // projected-gradient norm threshold
    int max_iters = 50000;
    double energy_flat_tol = 1e-13;
    int patience = 50;            // flat steps before declaring convergence
    double tau_min = 1e-14;
    double neg_tol_factor = 1e-8; // sign_of_level tolerance is factor * mu

    void validate() const;
};

struct SolveStats {
    double energy = 0.0;
    double lambda = 0.0;
    int iterations = 0;
    bool converged = false;
    double grad_norm = 0.0;       // projected-gradient norm at exit
    std::string stop_reason;
};

// Rescales u to ||u||_2^2 = mu exactly (up to roundoff). Rejects zero fields.
void project_mass(const EnergyModel& model, Vec& u, double mu);

// Projected (normalized) gradient descent with backtracking. Iterates
// u <- project_mass(u - tau * grad) with tau shrinking until the
// post-projection energy strictly decreases and growing after accepted steps.
// Stops on small projected gradient or on a patience window of flat energy.
// `on_accept(iter, energy, u)` fires after every accepted step.
SolveStats minimize(const EnergyModel& model, double mu, Vec& u, const SolveConfig& cfg,
                    const std::function<void(int, double, const Vec&)>& on_accept = {});

enum class LevelSign { Negative, Zero };

struct SignReport {
    LevelSign sign = LevelSign::Zero;
    double best_energy = 0.0;
    double neg_tol = 0.0;         // the heuristic threshold used
    std::vector<double> start_energies;
};

// Classifies the ground-state level at mass mu from multi-start runs:
// Negative iff the best achieved energy is below -neg_tol. The tolerance is a
// declared heuristic and is always reported alongside the classification.
SignReport sign_of_level(const EnergyModel& model, double mu, const SolveConfig& cfg,
                         int n_starts);

}  // namespace gridnls
