#pragma once

#include <vector>

#include "gridnls/field.hpp"
#include "gridnls/flow.hpp"
#include "gridnls/grid.hpp"

namespace gridnls {

struct EnergyParams {
    double p = 2.5;
    double q = 2.5;
    double alpha = 1.0;
    double beta = 1.0;
    double mu = 1.0;

    void validate() const;
};

// Euler-Lagrange diagnostics for a converged state. pde is relative to
// ||u||_inf; the vertex residuals use the outgoing one-sided derivative
// u'_e(v), so both shrink at first order in h at a discrete critical point.
struct ELResidual {
    double pde = 0.0;
    double kirchhoff = 0.0;
    double delta = 0.0;
};

// E(u) = 1/2 ||u'||^2 - (alpha/p) ||u||_p^p - (beta/q) sum_{v in V} |u(v)|^q
// on the truncated grid, with window-boundary vertices frozen at zero.
class GridEnergy final : public EnergyModel {
public:
    GridEnergy(const Grid& grid, const EnergyParams& params, std::vector<int> nl_vertices);

    double energy(const Vec& u) const override;
    void gradient(const Vec& u, Vec& g) const override;
    double inner(const Vec& a, const Vec& b) const override;
    std::size_t size() const override { return grid_->dof(); }
    void apply_constraints(Vec& u) const override;
    Vec initial_guess(int start, double mu) const override;

    double lagrange_multiplier(const Vec& u) const;
    ELResidual el_residual(const Vec& u) const;

    struct Parts {
        double kinetic_sq = 0.0;   // ||u'||_2^2
        double p_norm_p = 0.0;     // ||u||_p^p
        double vertex_sum_q = 0.0; // sum_{v in V} |u(v)|^q
    };
    Parts parts(const Vec& u) const;

    const Grid& grid() const { return *grid_; }
    const EnergyParams& params() const { return params_; }
    const std::vector<int>& nonlinear_vertices() const { return nl_vertices_; }

private:
    const Grid* grid_;
    EnergyParams params_;
    std::vector<int> nl_vertices_;
    std::vector<char> is_nl_;
    std::vector<int> boundary_;
    std::vector<IVec2> init_centers_;
};

}  // namespace gridnls
