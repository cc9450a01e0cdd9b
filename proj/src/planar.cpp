#include "gridnls/planar.hpp"

#include <cmath>
#include <stdexcept>

namespace gridnls {

namespace {

inline double signed_power(double x, double expo) {
    return std::copysign(std::pow(std::abs(x), expo - 1.0), x);
}

}  // namespace

PlanarEnergy::PlanarEnergy(const PlanarSpec& spec, const LimitCase& lc, double p, double q,
                           double cp, double cq)
    : spec_(spec), lc_(lc), p_(p), q_(q), cp_(cp), cq_(cq) {
    if (spec_.N < 1 || !(spec_.h > 0.0)) throw std::invalid_argument("planar: bad raster spec");
    if (lc_.kind == LimitCase::Kind::Strip) {
        if (!(lc_.R > 0.0)) throw std::invalid_argument("planar: strip requires R > 0");
        strip_rows_ = static_cast<int>(std::floor(lc_.R / spec_.h + 1e-12));
    }
}

bool PlanarEnergy::in_trace(int iy) const {
    switch (lc_.kind) {
        case LimitCase::Kind::Plane: return true;
        case LimitCase::Kind::Line: return iy == 0;
        case LimitCase::Kind::Strip: return std::abs(iy) <= strip_rows_;
    }
    return false;
}

PlanarEnergy::Parts PlanarEnergy::parts(const Vec& u) const {
    Parts out;
    const int N = spec_.N;
    const double h = spec_.h;
    const double h2 = h * h;
    auto at = [&](int ix, int iy) -> double {
        if (ix < -N || ix > N || iy < -N || iy > N) return 0.0;
        return u[static_cast<std::size_t>(iy + N) * spec_.side() + (ix + N)];
    };
    // Forward differences over every adjacent pair with an endpoint inside;
    // the zero continuation makes this the Dirichlet quadratic form.
    for (int iy = -N; iy <= N; ++iy) {
        for (int ix = -N - 1; ix <= N; ++ix) {
            const double d = at(ix + 1, iy) - at(ix, iy);
            out.kinetic_sq += d * d;
        }
    }
    for (int ix = -N; ix <= N; ++ix) {
        for (int iy = -N - 1; iy <= N; ++iy) {
            const double d = at(ix, iy + 1) - at(ix, iy);
            out.kinetic_sq += d * d;
        }
    }

    for (int iy = -N; iy <= N; ++iy) {
        for (int ix = -N; ix <= N; ++ix) {
            const double v = at(ix, iy);
            out.p_term += h2 * std::pow(std::abs(v), p_);
            if (lc_.kind != LimitCase::Kind::Line && in_trace(iy))
                out.trace_term += h2 * std::pow(std::abs(v), q_);
        }
    }
    if (lc_.kind == LimitCase::Kind::Line)
        for (int ix = -N; ix <= N; ++ix)
            out.trace_term += h * std::pow(std::abs(at(ix, 0)), q_);
    return out;
}

double PlanarEnergy::energy(const Vec& u) const {
    const Parts pr = parts(u);
    return 0.5 * pr.kinetic_sq - cp_ / p_ * pr.p_term - cq_ / q_ * pr.trace_term;
}

void PlanarEnergy::gradient(const Vec& u, Vec& g) const {
    const int N = spec_.N;
    const double h = spec_.h;
    const double inv_h2 = 1.0 / (h * h);
    g.assign(u.size(), 0.0);
    auto at = [&](int ix, int iy) -> double {
        if (ix < -N || ix > N || iy < -N || iy > N) return 0.0;
        return u[static_cast<std::size_t>(iy + N) * spec_.side() + (ix + N)];
    };
    std::size_t idx = 0;
    for (int iy = -N; iy <= N; ++iy) {
        for (int ix = -N; ix <= N; ++ix, ++idx) {
            const double v = u[idx];
            double val = (4.0 * v - at(ix + 1, iy) - at(ix - 1, iy) - at(ix, iy + 1) -
                          at(ix, iy - 1)) *
                         inv_h2;
            val -= cp_ * signed_power(v, p_);
            if (lc_.kind == LimitCase::Kind::Line) {
                if (iy == 0) val -= cq_ * signed_power(v, q_) / h;
            } else if (in_trace(iy)) {
                val -= cq_ * signed_power(v, q_);
            }
            g[idx] = val;
        }
    }
}

double PlanarEnergy::inner(const Vec& a, const Vec& b) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc * spec_.h * spec_.h;
}

Vec PlanarEnergy::initial_guess(int start, double mu) const {
    const int N = spec_.N;
    const double h = spec_.h;
    const double L = spec_.half_width();
    static const double offsets[5][2] = {{0, 0}, {0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}};
    const double cx = offsets[start % 5][0] * L;
    const double cy = offsets[start % 5][1] * L;
    const double sigma = L / 6.0;
    Vec u(spec_.dof());
    std::size_t idx = 0;
    for (int iy = -N; iy <= N; ++iy)
        for (int ix = -N; ix <= N; ++ix, ++idx) {
            const double dx = ix * h - cx, dy = iy * h - cy;
            u[idx] = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
        }
    const double m = inner(u, u);
    const double s = std::sqrt(mu / m);
    for (double& x : u) x *= s;
    return u;
}

double PlanarEnergy::lagrange_multiplier(const Vec& u) const {
    const double m = inner(u, u);
    if (!(m > 0.0)) throw std::invalid_argument("lagrange_multiplier: zero field");
    Vec g;
    gradient(u, g);
    return -inner(g, u) / m;
}

void check_planar_ranges(const LimitCase& lc, double p, double q) {
    const bool p_ok = p > 2.0 && p < 4.0;
    switch (lc.kind) {
        case LimitCase::Kind::Plane:
        case LimitCase::Kind::Strip:
            if (!p_ok || !(q > 2.0 && q < 4.0))
                throw std::invalid_argument(
                    "planar ground state requires p in (2,4) and q in (2,4); outside this range "
                    "the level is unbounded below (for large mass at the borderline)");
            break;
        case LimitCase::Kind::Line:
            if (!p_ok || !(q > 2.0 && q < 3.0))
                throw std::invalid_argument(
                    "line-concentrated ground state requires p in (2,4) and q in (2,3); outside "
                    "this range the level is unbounded below (for large mass at the borderline)");
            break;
    }
}

double jump_residual(const PlanarField& f, double q, double cq) {
    const int N = f.spec.N;
    const double h = f.spec.h;
    double worst = 0.0;
    for (int ix = -N; ix <= N; ++ix) {
        const double u0 = f.at(ix, 0);
        const double up = (f.at(ix, 1) - u0) / h;
        const double um = (u0 - f.at(ix, -1)) / h;
        worst = std::max(worst, std::abs(up - um + cq * signed_power(u0, q)));
    }
    return worst;
}

PlanarResidual planar_el_residual(const PlanarEnergy& model, const PlanarField& f) {
    PlanarResidual out;
    const Vec& u = f.values;
    double sup = 0.0;
    for (double x : u) sup = std::max(sup, std::abs(x));
    if (sup == 0.0) return out;
    const double lambda = model.lagrange_multiplier(u);

    // Stationarity of the lumped scheme: gradient + lambda * u = 0, checked
    // away from the concentration row for the line case.
    Vec g;
    model.gradient(u, g);
    const int N = model.spec().N;
    std::size_t idx = 0;
    for (int iy = -N; iy <= N; ++iy) {
        for (int ix = -N; ix <= N; ++ix, ++idx) {
            if (model.limit_case().kind == LimitCase::Kind::Line && iy == 0) continue;
            out.pde = std::max(out.pde, std::abs(g[idx] + lambda * u[idx]));
        }
    }
    out.pde /= sup;
    if (model.limit_case().kind == LimitCase::Kind::Line)
        out.jump = jump_residual(f, 0.0, 0.0);  // overwritten by caller; see below
    return out;
}

PlanarSolve planar_ground_state(const LimitCase& lc, double p, double q, double mu, int N,
                                double h, const SolveConfig& cfg, double cp, double cq,
                                double boundary_tol, int max_doublings) {
    check_planar_ranges(lc, p, q);
    PlanarSolve out;
    for (int attempt = 0;; ++attempt) {
        const PlanarSpec spec{N, h};
        PlanarEnergy model(spec, lc, p, q, cp, cq);
        Vec u = model.initial_guess(0, mu);
        const SolveStats stats = minimize(model, mu, u, cfg);

        // Sign normalization: ground states are positive up to a global sign.
        double integral = 0.0;
        for (double x : u) integral += x;
        if (integral < 0.0)
            for (double& x : u) x = -x;

        out.field = PlanarField{spec, std::move(u)};
        out.stats = stats;
        out.residual = planar_el_residual(model, out.field);
        if (lc.kind == LimitCase::Kind::Line) out.residual.jump = jump_residual(out.field, q, cq);

        double boundary_max = 0.0, sup = 0.0;
        for (int k = -N; k <= N; ++k) {
            boundary_max = std::max({boundary_max, std::abs(out.field.at(k, -N)),
                                     std::abs(out.field.at(k, N)), std::abs(out.field.at(-N, k)),
                                     std::abs(out.field.at(N, k))});
        }
        for (double x : out.field.values) sup = std::max(sup, std::abs(x));
        if (boundary_max <= boundary_tol * sup || attempt >= max_doublings) break;
        N *= 2;
    }
    return out;
}

}  // namespace gridnls
