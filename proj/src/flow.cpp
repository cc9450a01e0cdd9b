#include "gridnls/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace gridnls {

void SolveConfig::validate() const {
    if (!(step0 > 0.0)) throw std::invalid_argument("solver: step0 must be > 0");
    if (!(shrink > 0.0 && shrink < 1.0)) throw std::invalid_argument("solver: shrink must be in (0,1)");
    if (!(grow > 1.0)) throw std::invalid_argument("solver: grow must be > 1");
    if (!(grad_tol > 0.0)) throw std::invalid_argument("solver: grad_tol must be > 0");
    if (max_iters < 1) throw std::invalid_argument("solver: max_iters must be >= 1");
    if (!(energy_flat_tol > 0.0)) throw std::invalid_argument("solver: energy_flat_tol must be > 0");
}

void project_mass(const EnergyModel& model, Vec& u, double mu) {
    const double m = model.mass(u);
    if (!(m > 0.0)) throw std::invalid_argument("project_mass: zero field");
    const double s = std::sqrt(mu / m);
    for (double& x : u) x *= s;
}

namespace {

double projected_grad_norm(const EnergyModel& model, const Vec& u, const Vec& g, double mu) {
    // Component of g along u removed; norms in the lumped metric.
    const double gu = model.inner(g, u);
    const double gg = model.inner(g, g);
    const double val = gg - gu * gu / mu;
    return std::sqrt(val > 0.0 ? val : 0.0);
}

}  // namespace

SolveStats minimize(const EnergyModel& model, double mu, Vec& u, const SolveConfig& cfg,
                    const std::function<void(int, double, const Vec&)>& on_accept) {
    cfg.validate();
    if (!(mu > 0.0)) throw std::invalid_argument("minimize: mu must be > 0");
    if (u.size() != model.size()) throw std::invalid_argument("minimize: field size mismatch");

    model.apply_constraints(u);
    project_mass(model, u, mu);

    SolveStats stats;
    double energy = model.energy(u);
    double tau = cfg.step0;
    Vec g(u.size()), trial(u.size());
    int flat_count = 0;

    int it = 0;
    for (; it < cfg.max_iters; ++it) {
        model.gradient(u, g);
        model.apply_constraints(g);
        stats.grad_norm = projected_grad_norm(model, u, g, mu);
        if (stats.grad_norm < cfg.grad_tol) {
            stats.converged = true;
            stats.stop_reason = "gradient";
            break;
        }

        bool accepted = false;
        double trial_energy = 0.0;
        while (tau >= cfg.tau_min) {
            for (std::size_t i = 0; i < u.size(); ++i) trial[i] = u[i] - tau * g[i];
            project_mass(model, trial, mu);
            trial_energy = model.energy(trial);
            if (trial_energy < energy) {
                accepted = true;
                break;
            }
            tau *= cfg.shrink;
        }
        if (!accepted) {
            // Step underflow: no strictly decreasing step exists at roundoff
            // scale. Honest convergence only if the gradient told us so.
            stats.converged = false;
            stats.stop_reason = "stalled";
            break;
        }

        if (energy - trial_energy < cfg.energy_flat_tol)
            ++flat_count;
        else
            flat_count = 0;
        u.swap(trial);
        energy = trial_energy;
        tau *= cfg.grow;
        if (on_accept) on_accept(it, energy, u);
        if (flat_count >= cfg.patience) {
            stats.converged = true;
            stats.stop_reason = "energy-flat";
            ++it;
            break;
        }
    }
    if (stats.stop_reason.empty()) stats.stop_reason = "max-iters";

    stats.iterations = it;
    stats.energy = energy;
    model.gradient(u, g);
    model.apply_constraints(g);
    stats.lambda = -model.inner(g, u) / model.mass(u);
    stats.grad_norm = projected_grad_norm(model, u, g, mu);
    return stats;
}

SignReport sign_of_level(const EnergyModel& model, double mu, const SolveConfig& cfg,
                         int n_starts) {
    if (n_starts < 1) throw std::invalid_argument("sign_of_level: n_starts must be >= 1");
    SignReport report;
    report.neg_tol = cfg.neg_tol_factor * mu;
    report.best_energy = 0.0;
    for (int s = 0; s < n_starts; ++s) {
        Vec u = model.initial_guess(s, mu);
        const SolveStats stats = minimize(model, mu, u, cfg);
        report.start_energies.push_back(stats.energy);
        if (stats.energy < report.best_energy) report.best_energy = stats.energy;
    }
    report.sign = report.best_energy < -report.neg_tol ? LevelSign::Negative : LevelSign::Zero;
    return report;
}

}  // namespace gridnls
