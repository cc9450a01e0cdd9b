#include "gridnls/grid.hpp"

namespace gridnls {

Grid::Grid(const GridSpec& spec) : spec_(spec) {
    spec_.validate();
    const int W = spec_.window;
    edges_.reserve(static_cast<std::size_t>(spec_.edge_count()));
    // Horizontal edges ordered by (j, i), then vertical edges by (j, i); this
    // order is part of the field dump format.
    for (int j = -W; j <= W; ++j)
        for (int i = -W; i < W; ++i)
            edges_.push_back({vertex_index({i, j}), vertex_index({i + 1, j}), true, {i, j}});
    for (int j = -W; j < W; ++j)
        for (int i = -W; i <= W; ++i)
            edges_.push_back({vertex_index({i, j}), vertex_index({i, j + 1}), false, {i, j}});

    incident_.resize(static_cast<std::size_t>(vertex_count()));
    for (int e = 0; e < edge_count(); ++e) {
        incident_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].a)].push_back(e);
        incident_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].b)].push_back(e);
    }

    weights_.assign(dof(), spec_.h());
    for (int v = 0; v < vertex_count(); ++v)
        weights_[static_cast<std::size_t>(v)] = degree(v) * spec_.h() / 2.0;
}

std::vector<std::size_t> Grid::edge_chain(int e) const {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    std::vector<std::size_t> chain;
    chain.reserve(static_cast<std::size_t>(spec_.m) + 2);
    chain.push_back(static_cast<std::size_t>(ed.a));
    for (int k = 0; k < spec_.m; ++k) chain.push_back(edge_sample_index(e, k));
    chain.push_back(static_cast<std::size_t>(ed.b));
    return chain;
}

std::array<double, 2> Grid::dof_point(std::size_t idx) const {
    const double eps = spec_.epsilon;
    if (idx < static_cast<std::size_t>(vertex_count())) {
        const IVec2 p = vertex_coords(static_cast<int>(idx));
        return {eps * p.x, eps * p.y};
    }
    const std::size_t rel = idx - static_cast<std::size_t>(vertex_count());
    const int e = static_cast<int>(rel / spec_.m);
    const int k = static_cast<int>(rel % spec_.m);
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    const double t = (k + 1) * spec_.h();
    if (ed.horizontal) return {eps * ed.cell.x + t, eps * ed.cell.y};
    return {eps * ed.cell.x, eps * ed.cell.y + t};
}

Grid build_grid(const GridSpec& spec) { return Grid(spec); }

LCellEdges lcell_edges(IVec2 cell, const Grid& grid) {
    const int W = grid.spec().window;
    LCellEdges out;
    if (cell.x < -W || cell.x > W || cell.y < -W || cell.y > W) return out;
    const int side = grid.spec().side();
    if (cell.x < W) {
        // Horizontal edges are laid out first, (j, i) row-major with i < W.
        out.east = (cell.y + W) * (side - 1) + (cell.x + W);
    }
    if (cell.y < W) {
        const int n_horizontal = side * (side - 1);
        out.north = n_horizontal + (cell.y + W) * side + (cell.x + W);
    }
    return out;
}

}  // namespace gridnls
