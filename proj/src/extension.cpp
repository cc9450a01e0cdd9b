#include "gridnls/extension.hpp"

#include <algorithm>
#include <cmath>

namespace gridnls {

namespace {

struct Tri {
    // Corner points and affine values.
    std::array<double, 2> P[3];
    double f[3];
};

// Degree-5 seven-point rule on a triangle (barycentric points/weights).
constexpr double kA1 = 0.059715871789770;
constexpr double kA2 = 0.470142064105115;
constexpr double kW0 = 0.225;
constexpr double kW1 = 0.132394152788506;
constexpr double kW2 = 0.125939180544827;

double tri_area(const Tri& t) {
    const double ux = t.P[1][0] - t.P[0][0], uy = t.P[1][1] - t.P[0][1];
    const double vx = t.P[2][0] - t.P[0][0], vy = t.P[2][1] - t.P[0][1];
    return 0.5 * std::abs(ux * vy - uy * vx);
}

double quad7_abs_pow(const Tri& t, double r) {
    static const double pts[7][3] = {
        {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
        {1.0 - 2.0 * kA1, kA1, kA1},
        {kA1, 1.0 - 2.0 * kA1, kA1},
        {kA1, kA1, 1.0 - 2.0 * kA1},
        {1.0 - 2.0 * kA2, kA2, kA2},
        {kA2, 1.0 - 2.0 * kA2, kA2},
        {kA2, kA2, 1.0 - 2.0 * kA2},
    };
    static const double wts[7] = {kW0, kW1, kW1, kW1, kW2, kW2, kW2};
    double acc = 0.0;
    for (int k = 0; k < 7; ++k) {
        const double f = pts[k][0] * t.f[0] + pts[k][1] * t.f[1] + pts[k][2] * t.f[2];
        acc += wts[k] * std::pow(std::abs(f), r);
    }
    return acc * tri_area(t);
}

// Clips the triangle against {f >= 0} (keep_positive) or {f <= 0}; the result
// is a polygon with up to 4 corners, fan-triangulated into `out`.
void clip_sign(const Tri& t, bool keep_positive, std::vector<Tri>& out) {
    std::array<double, 2> poly[5];
    double fv[5];
    int n = 0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const double fi = keep_positive ? t.f[i] : -t.f[i];
        const double fj = keep_positive ? t.f[j] : -t.f[j];
        if (fi >= 0.0) {
            poly[n] = t.P[i];
            fv[n++] = t.f[i];
        }
        if ((fi > 0.0 && fj < 0.0) || (fi < 0.0 && fj > 0.0)) {
            const double s = fi / (fi - fj);
            poly[n] = {t.P[i][0] + s * (t.P[j][0] - t.P[i][0]),
                       t.P[i][1] + s * (t.P[j][1] - t.P[i][1])};
            fv[n++] = 0.0;
        }
    }
    for (int i = 2; i < n; ++i) {
        Tri sub;
        sub.P[0] = poly[0];
        sub.f[0] = fv[0];
        sub.P[1] = poly[i - 1];
        sub.f[1] = fv[i - 1];
        sub.P[2] = poly[i];
        sub.f[2] = fv[i];
        out.push_back(sub);
    }
}

double integrate_abs_pow(const Tri& t, double r) {
    const double lo = std::min({t.f[0], t.f[1], t.f[2]});
    const double hi = std::max({t.f[0], t.f[1], t.f[2]});
    if (lo >= 0.0 || hi <= 0.0) return quad7_abs_pow(t, r);
    std::vector<Tri> sub;
    clip_sign(t, true, sub);
    clip_sign(t, false, sub);
    double acc = 0.0;
    for (const Tri& s : sub) acc += quad7_abs_pow(s, r);
    return acc;
}

}  // namespace

double AffineExtension::vertex_value(int i, int j) const {
    const int W = grid_->spec().window;
    if (i < -W || i > W || j < -W || j > W) return 0.0;
    return (*values_)[static_cast<std::size_t>(grid_->vertex_index({i, j}))];
}

double AffineExtension::eval(double x, double y) const {
    const double eps = grid_->spec().epsilon;
    const int W = grid_->spec().window;
    const double rx = x / eps, ry = y / eps;
    if (rx < -W || rx > W || ry < -W || ry > W) return 0.0;
    int i = static_cast<int>(std::floor(rx));
    int j = static_cast<int>(std::floor(ry));
    if (i == W) --i;
    if (j == W) --j;
    const double s = rx - i, t = ry - j;
    const double a = vertex_value(i, j);
    const double c = vertex_value(i + 1, j + 1);
    if (t <= s) {  // down-diagonal triangle
        const double b = vertex_value(i + 1, j);
        return a * (1.0 - s) + b * (s - t) + c * t;
    }
    const double d = vertex_value(i, j + 1);  // up-diagonal triangle
    return a * (1.0 - t) + d * (t - s) + c * s;
}

std::array<double, 2> AffineExtension::gradient_at(double x, double y) const {
    const double eps = grid_->spec().epsilon;
    const int W = grid_->spec().window;
    const double rx = x / eps, ry = y / eps;
    if (rx < -W || rx > W || ry < -W || ry > W) return {0.0, 0.0};
    int i = static_cast<int>(std::floor(rx));
    int j = static_cast<int>(std::floor(ry));
    if (i == W) --i;
    if (j == W) --j;
    const double s = rx - i, t = ry - j;
    const double a = vertex_value(i, j);
    const double c = vertex_value(i + 1, j + 1);
    if (t <= s) {
        const double b = vertex_value(i + 1, j);
        return {(b - a) / eps, (c - b) / eps};
    }
    const double d = vertex_value(i, j + 1);
    return {(c - d) / eps, (d - a) / eps};
}

AffineExtension::Norms AffineExtension::planar_norms(double r) const {
    const int W = grid_->spec().window;
    const double eps = grid_->spec().epsilon;
    const double area = eps * eps / 2.0;
    Norms n;
    for (int j = -W; j < W; ++j) {
        for (int i = -W; i < W; ++i) {
            const double a = vertex_value(i, j);
            const double b = vertex_value(i + 1, j);
            const double c = vertex_value(i + 1, j + 1);
            const double d = vertex_value(i, j + 1);
            // Exact integrals of the affine pieces: for corner values
            // (f1,f2,f3), int f^2 = area/6 * (f1^2+f2^2+f3^2+f1f2+f1f3+f2f3)
            // and the gradient is constant per triangle.
            n.l2_sq += area / 6.0 * (a * a + b * b + c * c + a * b + a * c + b * c);
            n.l2_sq += area / 6.0 * (a * a + d * d + c * c + a * d + a * c + d * c);
            n.grad_l2_sq += 0.5 * ((b - a) * (b - a) + (c - b) * (c - b));
            n.grad_l2_sq += 0.5 * ((c - d) * (c - d) + (d - a) * (d - a));

            const double x0 = eps * i, y0 = eps * j;
            Tri down{{{x0, y0}, {x0 + eps, y0}, {x0 + eps, y0 + eps}}, {a, b, c}};
            Tri up{{{x0, y0}, {x0, y0 + eps}, {x0 + eps, y0 + eps}}, {a, d, c}};
            n.lr += integrate_abs_pow(down, r);
            n.lr += integrate_abs_pow(up, r);
        }
    }
    return n;
}

PlanarField AffineExtension::rasterize(int N, double h, double cx, double cy) const {
    PlanarField f = PlanarField::zeros({N, h});
    for (int iy = -N; iy <= N; ++iy)
        for (int ix = -N; ix <= N; ++ix) f.ref(ix, iy) = eval(cx + ix * h, cy + iy * h);
    return f;
}

double AffineExtension::trace_derivative_sq(IVec2 v) const {
    const double eps = grid_->spec().epsilon;
    const int W = grid_->spec().window;
    const double len = std::hypot(static_cast<double>(v.x), static_cast<double>(v.y));
    const double ux = v.x / len, uy = v.y / len;
    const double L = W * eps;

    // Window crossing parameter range of t -> (t*ux, t*uy).
    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();
    if (ux != 0.0) {
        t0 = std::max(t0, std::min(-L / ux, L / ux));
        t1 = std::min(t1, std::max(-L / ux, L / ux));
    }
    if (uy != 0.0) {
        t0 = std::max(t0, std::min(-L / uy, L / uy));
        t1 = std::min(t1, std::max(-L / uy, L / uy));
    }
    if (!(t0 < t1)) return 0.0;

    // Breakpoints: crossings with x = eps*k, y = eps*k and the cell diagonals
    // y - x = eps*k.
    std::vector<double> cuts{t0, t1};
    auto add_family = [&](double denom, double offset_scale) {
        if (denom == 0.0) return;
        // t*denom = eps*k  =>  t = eps*k/denom
        (void)offset_scale;
        const double tmin = std::min(t0 * denom, t1 * denom) / eps;
        const double tmax = std::max(t0 * denom, t1 * denom) / eps;
        for (int k = static_cast<int>(std::floor(tmin)) - 1;
             k <= static_cast<int>(std::ceil(tmax)) + 1; ++k) {
            const double t = eps * k / denom;
            if (t > t0 && t < t1) cuts.push_back(t);
        }
    };
    add_family(ux, 0.0);
    add_family(uy, 0.0);
    add_family(uy - ux, 0.0);
    std::sort(cuts.begin(), cuts.end());

    double acc = 0.0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double ta = cuts[s], tb = cuts[s + 1];
        if (tb - ta < 1e-15 * eps) continue;
        const double tm = 0.5 * (ta + tb);
        const auto g = gradient_at(tm * ux, tm * uy);
        const double dds = g[0] * ux + g[1] * uy;
        acc += dds * dds * (tb - ta);
    }
    return acc;
}

std::array<double, 2> AffineExtension::argmax_abs() const {
    const Grid& g = *grid_;
    int best = 0;
    double best_val = -1.0;
    for (int vid = 0; vid < g.vertex_count(); ++vid) {
        const double a = std::abs((*values_)[static_cast<std::size_t>(vid)]);
        if (a > best_val) {
            best_val = a;
            best = vid;
        }
    }
    const IVec2 p = g.vertex_coords(best);
    return {g.spec().epsilon * p.x, g.spec().epsilon * p.y};
}

}  // namespace gridnls
