#pragma once

#include <string>

#include "gridnls/flow.hpp"
#include "gridnls/planar_field.hpp"

namespace gridnls {

// Limit geometry. Solves always run in the canonical frame theta = 0 (line
// and strip horizontal); theta is carried as metadata and used only when a
// reference state is rotated for comparison against grid extensions.
struct LimitCase {
    enum class Kind { Plane, Line, Strip } kind = Kind::Plane;
    double R = 0.0;      // strip half-width
    double theta = 0.0;  // in (-pi/2, pi/2]

    static LimitCase plane() { return {Kind::Plane, 0.0, 0.0}; }
    static LimitCase line(double theta = 0.0) { return {Kind::Line, 0.0, theta}; }
    static LimitCase strip(double R, double theta = 0.0) { return {Kind::Strip, R, theta}; }
};

// Planar energy on the truncated box with 5-point finite differences:
//   1/2 sum h^2 |grad_h u|^2 - (cp/p) sum h^2 |u|^p - (cq/q) T
// where T concentrates on the whole box (Plane), the row y = 0 with weight h
// (Line) or the rows |y| <= R (Strip). The coefficients cp, cq default to 1
// and exist so single-nonlinearity reference levels can be computed.
class PlanarEnergy final : public EnergyModel {
public:
    PlanarEnergy(const PlanarSpec& spec, const LimitCase& lc, double p, double q, double cp = 1.0,
                 double cq = 1.0);

    double energy(const Vec& u) const override;
    void gradient(const Vec& u, Vec& g) const override;
    double inner(const Vec& a, const Vec& b) const override;
    std::size_t size() const override { return spec_.dof(); }
    Vec initial_guess(int start, double mu) const override;

    double lagrange_multiplier(const Vec& u) const;

    struct Parts {
        double kinetic_sq = 0.0;  // sum h^2 |grad_h u|^2
        double p_term = 0.0;      // sum h^2 |u|^p
        double trace_term = 0.0;  // the T sum of the case
    };
    Parts parts(const Vec& u) const;

    const PlanarSpec& spec() const { return spec_; }
    const LimitCase& limit_case() const { return lc_; }

private:
    PlanarSpec spec_;
    LimitCase lc_;
    double p_, q_, cp_, cq_;
    int strip_rows_ = 0;  // rows |iy| <= strip_rows_ belong to the strip

    bool in_trace(int iy) const;
};

struct PlanarResidual {
    double pde = 0.0;   // max |-Delta_h u + lambda u - f(u)| / ||u||_inf off the line
    double jump = 0.0;  // line case: discrete flux-jump defect on y = 0
};

struct PlanarSolve {
    PlanarField field;
    SolveStats stats;
    PlanarResidual residual;
};

// Attainment regimes (everything else refused): Plane p,q in (2,4);
// Line p in (2,4), q in (2,3); Strip p,q in (2,4).
void check_planar_ranges(const LimitCase& lc, double p, double q);

// Ground state of the limit problem at mass mu on the (2N+1)^2 raster. If the
// solution touches the box boundary above boundary_tol * ||u||_inf the box is
// doubled and the solve repeated, up to max_doublings times.
PlanarSolve planar_ground_state(const LimitCase& lc, double p, double q, double mu, int N,
                                double h, const SolveConfig& cfg, double cp = 1.0, double cq = 1.0,
                                double boundary_tol = 1e-8, int max_doublings = 2);

// Discrete version of the line jump condition
//   du+/dn - du-/dn = -|u|^(q-2) u  on the line,
// evaluated with one-sided differences across the row y = 0.
double jump_residual(const PlanarField& f, double q, double cq = 1.0);

PlanarResidual planar_el_residual(const PlanarEnergy& model, const PlanarField& f);

}  // namespace gridnls
