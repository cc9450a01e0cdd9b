#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gridnls/grid.hpp"

namespace gridnls {

enum class VertexSetKind { Finite, ZPeriodic, Z2Periodic };

// Description of the nonlinear-vertex set V in G_1 lattice coordinates.
// Periodic kinds generate V as the union of the translates of `base` along
// v1 (Z-periodic) or along v1 and v2 (Z2-periodic). On a grid with edgelength
// epsilon the materialized set is epsilon*V, i.e. the same lattice points.
struct VertexSetSpec {
    VertexSetKind kind = VertexSetKind::Finite;
    std::vector<IVec2> base;
    IVec2 v1{0, 0};
    IVec2 v2{0, 0};

    void validate() const;
    bool contains(IVec2 w) const;

    static VertexSetSpec finite(std::vector<IVec2> pts);
    static VertexSetSpec z_periodic(std::vector<IVec2> b, IVec2 v);
    static VertexSetSpec z2_periodic(std::vector<IVec2> b, IVec2 v1, IVec2 v2);
};

// Periodicity cell of a Z- or Z2-periodic set: Q0 is a union of L-cells whose
// translates tile the grid (Z2) or the strip graph G' (Z); V0 = Q0 ∩ V. The
// counts feed the beta scalings of the singular-limit theorems.
struct PeriodicityCell {
    std::vector<IVec2> q0_cells;  // representative vertices, one per L-cell of Q0
    std::vector<IVec2> v0;
    int n_vertices_q0 = 0;
    int n_v0 = 0;
};

// Runs the explicit construction: form k, enumerate Z^2 ∩ [-k,k)^2 (Z2 case)
// or a fundamental window of the strip (Z case), group vertices by lattice
// equivalence, pick per class the representative closest to the origin with
// lexicographic (x,y) tie-break, and verify the tiling on a test window.
PeriodicityCell build_cell(const VertexSetSpec& spec);

// Exact tiling checks used by build_cell and by property tests. Cells whose
// L-cell sticks out of the window are skipped; covered cells must be hit
// exactly once.
bool tiles_window(const PeriodicityCell& cell, const VertexSetSpec& spec, int window,
                  std::string* why = nullptr);
// Union of translated V0 copies equals V on the window.
bool recovers_vertex_set(const PeriodicityCell& cell, const VertexSetSpec& spec, int window,
                         std::string* why = nullptr);

// Vertex indices of V_eps ∩ window on the given grid, sorted ascending.
std::vector<int> materialize(const VertexSetSpec& spec, const Grid& grid);

// Theorem 1.7 vertex family: union of the translates of V along v-perp with
// |i*epsilon| <= R, as a Z-periodic set in G_1 coordinates.
VertexSetSpec build_strip_set(const VertexSetSpec& base, double R, double epsilon);

enum class BetaCase { Z2, ZLine, ZStrip };

// (alpha, beta) prescribed by the singular-limit theorems. alpha = 1/2 in all
// cases; beta = ratio * epsilon for the plane and strip limits and |v|/#V0 for
// the line limit. For the strip case pass the cell of the base set.
std::pair<double, double> beta_for_theorem(BetaCase c, const PeriodicityCell& cell, IVec2 v,
                                           double epsilon);

}  // namespace gridnls
