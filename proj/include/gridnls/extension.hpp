#pragma once

#include "gridnls/field.hpp"
#include "gridnls/grid.hpp"
#include "gridnls/planar_field.hpp"

namespace gridnls {

// Piecewise-affine extension of a grid field to the plane. Each grid cell
// splits into an up-diagonal and a down-diagonal triangle and the extension
// interpolates the three corner vertex values affinely; edge interior samples
// are ignored, so the extension agrees with the field at vertices but not
// necessarily inside edges. Outside the window the extension is zero.
class AffineExtension {
public:
    AffineExtension(const Grid& grid, const Vec& values) : grid_(&grid), values_(&values) {}
    explicit AffineExtension(const GridField& f) : grid_(f.grid), values_(&f.values) {}

    double eval(double x, double y) const;

    // Constant gradient of the affine piece containing (x,y); zero outside.
    std::array<double, 2> gradient_at(double x, double y) const;

    struct Norms {
        double l2_sq = 0.0;
        double grad_l2_sq = 0.0;
        double lr = 0.0;  // integral of |Au|^r (not a root)
    };
    // l2_sq and grad_l2_sq by closed-form integration of the affine pieces;
    // the L^r integral by a degree-5 triangle rule, splitting sign-changing
    // triangles along the zero line of the affine piece.
    Norms planar_norms(double r) const;

    // Samples eval on the raster shifted by (cx, cy): value at raster point
    // (ix*h, iy*h) is Au(cx + ix*h, cy + iy*h).
    PlanarField rasterize(int N, double h, double cx = 0.0, double cy = 0.0) const;

    // Integral over the window of |d/ds Au(s * v/|v|)|^2 along the line
    // through the origin with direction v: exact segment-wise restriction,
    // segments cut at every triangle crossing.
    double trace_derivative_sq(IVec2 v) const;

    // Location of the maximum of |Au| over vertices (the extension attains
    // its extrema at vertices).
    std::array<double, 2> argmax_abs() const;

private:
    const Grid* grid_;
    const Vec* values_;

    double vertex_value(int i, int j) const;
};

}  // namespace gridnls
