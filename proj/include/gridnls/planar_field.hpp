#pragma once

#include <cstddef>
#include <string>

#include "gridnls/flow.hpp"

namespace gridnls {

// Uniform square raster centered at the origin: (2N+1)^2 points with spacing
// h, value zero outside (Dirichlet continuation).
struct PlanarSpec {
    int N = 1;
    double h = 0.1;

    int side() const { return 2 * N + 1; }
    std::size_t dof() const { return static_cast<std::size_t>(side()) * side(); }
    double half_width() const { return N * h; }
};

struct PlanarField {
    PlanarSpec spec;
    Vec values;

    static PlanarField zeros(const PlanarSpec& s) { return {s, Vec(s.dof(), 0.0)}; }
    std::size_t index(int ix, int iy) const {
        return static_cast<std::size_t>(iy + spec.N) * spec.side() + (ix + spec.N);
    }
    double at(int ix, int iy) const {
        if (ix < -spec.N || ix > spec.N || iy < -spec.N || iy > spec.N) return 0.0;
        return values[index(ix, iy)];
    }
    double& ref(int ix, int iy) { return values[index(ix, iy)]; }
};

// Raster dump: text header "planar h=<h> nx=<nx> ny=<ny> x0=<x0> y0=<y0>"
// followed by row-major binary doubles.
void write_raster(const PlanarField& f, const std::string& path);
PlanarField read_raster(const std::string& path);

}  // namespace gridnls
