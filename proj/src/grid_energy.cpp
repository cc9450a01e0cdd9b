#include "gridnls/grid_energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gridnls {

namespace {

inline double signed_power(double x, double expo) {
    // |x|^(expo-1) * x, the derivative direction of |x|^expo / expo
    return std::copysign(std::pow(std::abs(x), expo - 1.0), x);
}

}  // namespace

void EnergyParams::validate() const {
    if (!(p > 2.0 && p < 6.0)) throw std::invalid_argument("energy: p must lie in (2,6)");
    if (!(q > 2.0 && q < 4.0)) throw std::invalid_argument("energy: q must lie in (2,4)");
    if (alpha < 0.0) throw std::invalid_argument("energy: alpha must be >= 0");
    if (beta < 0.0) throw std::invalid_argument("energy: beta must be >= 0");
    if (!(mu > 0.0)) throw std::invalid_argument("energy: mu must be > 0");
}

GridEnergy::GridEnergy(const Grid& grid, const EnergyParams& params, std::vector<int> nl_vertices)
    : grid_(&grid), params_(params), nl_vertices_(std::move(nl_vertices)) {
    params_.validate();
    is_nl_.assign(grid.dof(), 0);
    for (int v : nl_vertices_) {
        if (v < 0 || v >= grid.vertex_count())
            throw std::invalid_argument("grid energy: nonlinear vertex out of range");
        is_nl_[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 0; v < grid.vertex_count(); ++v)
        if (grid.on_boundary(v)) boundary_.push_back(v);

    // Multi-start centers: nonlinear vertices nearest the origin first, then
    // the origin itself and four half-window shifts.
    std::vector<int> nl_sorted = nl_vertices_;
    std::sort(nl_sorted.begin(), nl_sorted.end(), [&](int a, int b) {
        const IVec2 pa = grid.vertex_coords(a), pb = grid.vertex_coords(b);
        const long ra = static_cast<long>(pa.x) * pa.x + static_cast<long>(pa.y) * pa.y;
        const long rb = static_cast<long>(pb.x) * pb.x + static_cast<long>(pb.y) * pb.y;
        if (ra != rb) return ra < rb;
        return pa < pb;
    });
    const int W = grid.spec().window;
    for (int k = 0; k < std::min<std::size_t>(4, nl_sorted.size()); ++k)
        init_centers_.push_back(grid.vertex_coords(nl_sorted[static_cast<std::size_t>(k)]));
    for (IVec2 c : {IVec2{0, 0}, IVec2{W / 2, 0}, IVec2{0, W / 2}, IVec2{-W / 2, 0}, IVec2{0, -W / 2}}) {
        if (std::find(init_centers_.begin(), init_centers_.end(), c) == init_centers_.end())
            init_centers_.push_back(c);
    }
}

double GridEnergy::energy(const Vec& u) const {
    const Parts pr = parts(u);
    return 0.5 * pr.kinetic_sq - params_.alpha / params_.p * pr.p_norm_p -
           params_.beta / params_.q * pr.vertex_sum_q;
}

GridEnergy::Parts GridEnergy::parts(const Vec& u) const {
    Parts pr;
    const Grid& g = *grid_;
    const double h = g.spec().h();
    const int m = g.spec().m;
    const std::vector<double>& w = g.lumped_weights();
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        std::size_t prev = static_cast<std::size_t>(ed.a);
        for (int k = 0; k <= m; ++k) {
            const std::size_t next =
                k < m ? g.edge_sample_index(e, k) : static_cast<std::size_t>(ed.b);
            const double d = u[next] - u[prev];
            pr.kinetic_sq += d * d / h;
            prev = next;
        }
    }
    for (std::size_t i = 0; i < u.size(); ++i)
        pr.p_norm_p += w[i] * std::pow(std::abs(u[i]), params_.p);
    for (int v : nl_vertices_)
        pr.vertex_sum_q += std::pow(std::abs(u[static_cast<std::size_t>(v)]), params_.q);
    return pr;
}

void GridEnergy::gradient(const Vec& u, Vec& g) const {
    const Grid& grid = *grid_;
    const double h = grid.spec().h();
    const int m = grid.spec().m;
    const std::vector<double>& w = grid.lumped_weights();
    g.assign(u.size(), 0.0);

    // Stiffness action, then pointwise nonlinearities; everything divided by
    // the lumped mass so that <g,h>_w is the first variation.
    for (int e = 0; e < grid.edge_count(); ++e) {
        const Edge& ed = grid.edge(e);
        std::size_t prev = static_cast<std::size_t>(ed.a);
        for (int k = 0; k <= m; ++k) {
            const std::size_t next =
                k < m ? grid.edge_sample_index(e, k) : static_cast<std::size_t>(ed.b);
            const double d = (u[next] - u[prev]) / h;
            g[prev] -= d;
            g[next] += d;
            prev = next;
        }
    }
    for (std::size_t i = 0; i < u.size(); ++i)
        g[i] = g[i] / w[i] - params_.alpha * signed_power(u[i], params_.p);
    for (int v : nl_vertices_) {
        const std::size_t i = static_cast<std::size_t>(v);
        g[i] -= params_.beta * signed_power(u[i], params_.q) / w[i];
    }
}

double GridEnergy::inner(const Vec& a, const Vec& b) const { return lumped_inner(*grid_, a, b); }

void GridEnergy::apply_constraints(Vec& u) const {
    for (int v : boundary_) u[static_cast<std::size_t>(v)] = 0.0;
}

Vec GridEnergy::initial_guess(int start, double mu) const {
    const Grid& g = *grid_;
    const IVec2 c = init_centers_[static_cast<std::size_t>(start) % init_centers_.size()];
    const double eps = g.spec().epsilon;
    const double cx = eps * c.x, cy = eps * c.y;
    const double sigma = g.spec().window * eps / 6.0;
    Vec u(g.dof());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const auto p = g.dof_point(i);
        const double dx = p[0] - cx, dy = p[1] - cy;
        u[i] = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
    }
    apply_constraints(u);
    const double m = lumped_inner(g, u, u);
    const double s = std::sqrt(mu / m);
    for (double& x : u) x *= s;
    return u;
}

double GridEnergy::lagrange_multiplier(const Vec& u) const {
    const double m = inner(u, u);
    if (!(m > 0.0)) throw std::invalid_argument("lagrange_multiplier: zero field");
    Vec g;
    gradient(u, g);
    apply_constraints(g);
    return -inner(g, u) / m;
}

ELResidual GridEnergy::el_residual(const Vec& u) const {
    ELResidual res;
    const Grid& grid = *grid_;
    const double h = grid.spec().h();
    const int m = grid.spec().m;

    double sup = 0.0;
    for (double x : u) sup = std::max(sup, std::abs(x));
    if (sup == 0.0) return res;

    const double lambda = lagrange_multiplier(u);

    // Interior samples: second differences for u''.
    for (int e = 0; e < grid.edge_count(); ++e) {
        const auto chain = grid.edge_chain(e);
        for (int k = 1; k <= m; ++k) {
            const double upp =
                (u[chain[static_cast<std::size_t>(k) - 1]] - 2.0 * u[chain[static_cast<std::size_t>(k)]] +
                 u[chain[static_cast<std::size_t>(k) + 1]]) /
                (h * h);
            const double val = u[chain[static_cast<std::size_t>(k)]];
            const double r =
                std::abs(-upp + lambda * val - params_.alpha * signed_power(val, params_.p));
            res.pde = std::max(res.pde, r);
        }
    }
    res.pde /= sup;

    // Vertex flux sums with the outgoing one-sided derivative. Boundary
    // vertices are Dirichlet artifacts of the truncation and are skipped.
    for (int v = 0; v < grid.vertex_count(); ++v) {
        if (grid.on_boundary(v)) continue;
        double flux = 0.0;
        for (int e : grid.incident(v)) {
            const Edge& ed = grid.edge(e);
            std::size_t adj;
            if (ed.a == v)
                adj = m > 0 ? grid.edge_sample_index(e, 0) : static_cast<std::size_t>(ed.b);
            else
                adj = m > 0 ? grid.edge_sample_index(e, m - 1) : static_cast<std::size_t>(ed.a);
            flux += (u[adj] - u[static_cast<std::size_t>(v)]) / h;
        }
        if (is_nl_[static_cast<std::size_t>(v)]) {
            const double jump =
                flux + params_.beta * signed_power(u[static_cast<std::size_t>(v)], params_.q);
            res.delta = std::max(res.delta, std::abs(jump));
        } else {
            res.kirchhoff = std::max(res.kirchhoff, std::abs(flux));
        }
    }
    return res;
}

}  // namespace gridnls
