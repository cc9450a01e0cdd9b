#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gridnls {

// Integer lattice coordinate, always in G_1 units (the physical point is
// epsilon * (x, y)).
struct IVec2 {
    int x = 0;
    int y = 0;
    friend bool operator==(IVec2 a, IVec2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(IVec2 a, IVec2 b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

// Truncated square metric grid: vertices epsilon*(i,j) with |i|,|j| <= window,
// unit-direction edges of length epsilon, m interior sample points per edge.
struct GridSpec {
    double epsilon = 1.0;
    int window = 1;
    int m = 1;

    void validate() const {
        if (!(epsilon > 0.0)) throw std::invalid_argument("grid: epsilon must be > 0");
        if (window < 1) throw std::invalid_argument("grid: window must be >= 1");
        if (m < 1) throw std::invalid_argument("grid: m must be >= 1");
    }
    int side() const { return 2 * window + 1; }
    int vertex_count() const { return side() * side(); }
    int edge_count() const { return 2 * side() * (2 * window); }
    // Uniform sample step along every edge.
    double h() const { return epsilon / (m + 1); }
};

// Oriented edge. `a` is the west (horizontal) or south (vertical) endpoint, so
// finite differences taken from a to b carry a fixed sign convention.
struct Edge {
    int a = 0;
    int b = 0;
    bool horizontal = true;
    IVec2 cell;  // lattice coords of `a`; the edge belongs to L-cell `cell`
};

// Edges returned by lcell_edges. Boundary cells miss one or both entries.
struct LCellEdges {
    std::optional<int> east;
    std::optional<int> north;
};

class Grid {
public:
    explicit Grid(const GridSpec& spec);

    const GridSpec& spec() const { return spec_; }
    int vertex_count() const { return spec_.vertex_count(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    bool in_window(IVec2 p) const {
        const int W = spec_.window;
        return p.x >= -W && p.x <= W && p.y >= -W && p.y <= W;
    }
    int vertex_index(IVec2 p) const {
        return (p.y + spec_.window) * spec_.side() + (p.x + spec_.window);
    }
    IVec2 vertex_coords(int id) const {
        const int s = spec_.side();
        return {id % s - spec_.window, id / s - spec_.window};
    }
    bool on_boundary(int id) const {
        const IVec2 p = vertex_coords(id);
        const int W = spec_.window;
        return p.x == -W || p.x == W || p.y == -W || p.y == W;
    }
    int degree(int id) const { return static_cast<int>(incident_[static_cast<std::size_t>(id)].size()); }
    // Edge ids incident to a vertex (2 to 4 entries).
    const std::vector<int>& incident(int id) const { return incident_[static_cast<std::size_t>(id)]; }

    // Flat DOF layout shared by all fields on this grid: vertex values first
    // (row-major in (j,i)), then per-edge interior samples in edge order.
    std::size_t dof() const { return static_cast<std::size_t>(vertex_count()) + static_cast<std::size_t>(edge_count()) * spec_.m; }
    std::size_t edge_sample_index(int e, int k) const {
        return static_cast<std::size_t>(vertex_count()) + static_cast<std::size_t>(e) * spec_.m + k;
    }
    // DOF index chain along edge e: a, interior samples, b (m+2 entries).
    std::vector<std::size_t> edge_chain(int e) const;

    // Physical coordinates of any DOF index.
    std::array<double, 2> dof_point(std::size_t idx) const;

    // Lumped quadrature weight per DOF: h at edge interior samples, deg*h/2 at
    // vertices (trapezoid rule summed over incident edges).
    const std::vector<double>& lumped_weights() const { return weights_; }

private:
    GridSpec spec_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<double> weights_;
};

Grid build_grid(const GridSpec& spec);

// The two edges of L-cell (i,j): east edge epsilon*(i,i+1) x {epsilon j} and
// north edge {epsilon i} x epsilon*(j,j+1). Cells on the window boundary
// return the subset that exists.
LCellEdges lcell_edges(IVec2 cell, const Grid& grid);

}  // namespace gridnls
