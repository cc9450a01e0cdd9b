#pragma once

#include <functional>
#include <string>

#include "gridnls/flow.hpp"
#include "gridnls/grid.hpp"

namespace gridnls {

// Discrete function on the truncated grid in the flat DOF layout of Grid:
// vertex values first, then per-edge interior samples. Continuity at vertices
// is structural (edges reference the shared vertex entries).
struct GridField {
    const Grid* grid = nullptr;
    Vec values;
};

GridField zero_field(const Grid& grid);

// Trapezoid-quadrature L^r norm with step h = epsilon/(m+1); exact for the
// piecewise-linear representation when r = 2. Rejects r < 1.
double norm_r(const GridField& u, double r);

// ||u||_2^2 in the lumped metric.
double field_mass(const GridField& u);

// ||u'||_2^2 by first differences of consecutive samples, exact for
// piecewise-linear u.
double derivative_sq(const GridField& u);

double lumped_inner(const Grid& grid, const Vec& a, const Vec& b);

// Samples a closed-form profile at every vertex and edge sample point.
GridField restrict_profile(const std::function<double(double, double)>& f, const Grid& grid);

// Flat binary dump: one text header line "gridfield eps=<e> W=<w> m=<m>",
// then vertex values row-major and edge values in the fixed edge order.
void write_field(const GridField& u, const std::string& path);
struct FieldDump {
    GridSpec spec;
    Vec values;
};
FieldDump read_field(const std::string& path);

}  // namespace gridnls
