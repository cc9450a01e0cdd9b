#include "gridnls/periodic_sets.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace gridnls {

namespace {

std::int64_t cross(IVec2 a, IVec2 b) {
    return static_cast<std::int64_t>(a.x) * b.y - static_cast<std::int64_t>(a.y) * b.x;
}
std::int64_t dot(IVec2 a, IVec2 b) {
    return static_cast<std::int64_t>(a.x) * b.x + static_cast<std::int64_t>(a.y) * b.y;
}
IVec2 sub(IVec2 a, IVec2 b) { return {a.x - b.x, a.y - b.y}; }
IVec2 add(IVec2 a, IVec2 b) { return {a.x + b.x, a.y + b.y}; }
IVec2 scale(int k, IVec2 v) { return {k * v.x, k * v.y}; }
IVec2 perp(IVec2 v) { return {-v.y, v.x}; }
std::int64_t norm_sq(IVec2 v) { return dot(v, v); }

// w == b + k*v for some integer k?
bool on_z_orbit(IVec2 w, IVec2 b, IVec2 v) {
    const IVec2 d = sub(w, b);
    if (cross(d, v) != 0) return false;
    const std::int64_t num = dot(d, v);
    const std::int64_t den = norm_sq(v);
    return num % den == 0;
}

// w == b + k1*v1 + k2*v2 for integers k1,k2?
bool on_z2_orbit(IVec2 w, IVec2 b, IVec2 v1, IVec2 v2) {
    const IVec2 d = sub(w, b);
    const std::int64_t det = cross(v1, v2);
    const std::int64_t n1 = cross(d, v2);
    const std::int64_t n2 = cross(v1, d);
    return n1 % det == 0 && n2 % det == 0;
}

// Representative of the class {p + k*v} closest to the origin, ties broken
// lexicographically by (x, y).
IVec2 z_canonical(IVec2 p, IVec2 v) {
    const double k0 = -static_cast<double>(dot(p, v)) / static_cast<double>(norm_sq(v));
    IVec2 best = add(p, scale(static_cast<int>(std::floor(k0)) - 1, v));
    for (int k = static_cast<int>(std::floor(k0)); k <= static_cast<int>(std::floor(k0)) + 2; ++k) {
        const IVec2 cand = add(p, scale(k, v));
        if (norm_sq(cand) < norm_sq(best) || (norm_sq(cand) == norm_sq(best) && cand < best))
            best = cand;
    }
    return best;
}

void transverse_bounds(const VertexSetSpec& spec, std::int64_t& dmin, std::int64_t& dmax) {
    const IVec2 vp = perp(spec.v1);
    dmin = dmax = dot(spec.base.front(), vp);
    for (const IVec2& b : spec.base) {
        dmin = std::min(dmin, dot(b, vp));
        dmax = std::max(dmax, dot(b, vp));
    }
}

// Lattice vertices of the strip graph G': the tight transverse band holding V.
bool in_strip(IVec2 p, const VertexSetSpec& spec, std::int64_t dmin, std::int64_t dmax) {
    const std::int64_t d = dot(p, perp(spec.v1));
    return d >= dmin && d <= dmax;
}

}  // namespace

VertexSetSpec VertexSetSpec::finite(std::vector<IVec2> pts) {
    VertexSetSpec s;
    s.kind = VertexSetKind::Finite;
    s.base = std::move(pts);
    s.validate();
    return s;
}

VertexSetSpec VertexSetSpec::z_periodic(std::vector<IVec2> b, IVec2 v) {
    VertexSetSpec s;
    s.kind = VertexSetKind::ZPeriodic;
    s.base = std::move(b);
    s.v1 = v;
    s.validate();
    return s;
}

VertexSetSpec VertexSetSpec::z2_periodic(std::vector<IVec2> b, IVec2 v1, IVec2 v2) {
    VertexSetSpec s;
    s.kind = VertexSetKind::Z2Periodic;
    s.base = std::move(b);
    s.v1 = v1;
    s.v2 = v2;
    s.validate();
    return s;
}

void VertexSetSpec::validate() const {
    if (base.empty()) throw std::invalid_argument("vertex set: base list must not be empty");
    if (kind == VertexSetKind::ZPeriodic) {
        if (v1.x == 0 && v1.y == 0)
            throw std::invalid_argument("vertex set: Z-periodic vector must be nonzero");
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i + 1; j < base.size(); ++j)
                if (on_z_orbit(base[i], base[j], v1))
                    throw std::invalid_argument(
                        "vertex set: base list inconsistent with periodicity (equivalent points)");
    } else if (kind == VertexSetKind::Z2Periodic) {
        if (cross(v1, v2) == 0)
            throw std::invalid_argument("vertex set: Z2-periodic vectors must be linearly independent");
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i + 1; j < base.size(); ++j)
                if (on_z2_orbit(base[i], base[j], v1, v2))
                    throw std::invalid_argument(
                        "vertex set: base list inconsistent with periodicity (equivalent points)");
    }
}

bool VertexSetSpec::contains(IVec2 w) const {
    switch (kind) {
        case VertexSetKind::Finite:
            return std::find(base.begin(), base.end(), w) != base.end();
        case VertexSetKind::ZPeriodic:
            for (const IVec2& b : base)
                if (on_z_orbit(w, b, v1)) return true;
            return false;
        case VertexSetKind::Z2Periodic:
            for (const IVec2& b : base)
                if (on_z2_orbit(w, b, v1, v2)) return true;
            return false;
    }
    return false;
}

PeriodicityCell build_cell(const VertexSetSpec& spec) {
    spec.validate();
    PeriodicityCell cell;

    if (spec.kind == VertexSetKind::Z2Periodic) {
        const int k = static_cast<int>(std::llabs(cross(spec.v1, spec.v2)));
        // Group Z^2 ∩ [-k,k)^2 into lattice-equivalence classes; the chosen
        // representative per class is the member closest to (0,0).
        std::vector<IVec2> reps;
        for (int j = -k; j < k; ++j) {
            for (int i = -k; i < k; ++i) {
                const IVec2 p{i, j};
                bool seen = false;
                for (IVec2& r : reps) {
                    if (on_z2_orbit(p, r, spec.v1, spec.v2)) {
                        if (norm_sq(p) < norm_sq(r) || (norm_sq(p) == norm_sq(r) && p < r)) r = p;
                        seen = true;
                        break;
                    }
                }
                if (!seen) reps.push_back(p);
            }
        }
        std::sort(reps.begin(), reps.end());
        cell.q0_cells = reps;
        for (const IVec2& r : reps)
            if (spec.contains(r)) cell.v0.push_back(r);
    } else if (spec.kind == VertexSetKind::ZPeriodic) {
        std::int64_t dmin = 0, dmax = 0;
        transverse_bounds(spec, dmin, dmax);
        const std::int64_t vv = norm_sq(spec.v1);
        // One strip vertex per class has dot(p, v) in [0, |v|^2); enumerate a
        // box large enough to hold all of them, then take canonical reps.
        const double dm = static_cast<double>(std::max(std::llabs(dmin), std::llabs(dmax)));
        const int B =
            static_cast<int>(std::ceil(std::sqrt(static_cast<double>(vv * vv) + dm * dm) /
                                       std::sqrt(static_cast<double>(vv)))) +
            2;
        std::vector<IVec2> reps;
        for (int j = -B; j <= B; ++j) {
            for (int i = -B; i <= B; ++i) {
                const IVec2 p{i, j};
                if (!in_strip(p, spec, dmin, dmax)) continue;
                const std::int64_t t = dot(p, spec.v1);
                if (t < 0 || t >= vv) continue;
                reps.push_back(z_canonical(p, spec.v1));
            }
        }
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end(),
                               [](IVec2 a, IVec2 b) { return a.x == b.x && a.y == b.y; }),
                   reps.end());
        cell.q0_cells = reps;
        for (const IVec2& r : reps)
            if (spec.contains(r)) cell.v0.push_back(r);
    } else {
        throw std::invalid_argument("build_cell: spec must be Z- or Z2-periodic");
    }

    cell.n_vertices_q0 = static_cast<int>(cell.q0_cells.size());
    cell.n_v0 = static_cast<int>(cell.v0.size());
    if (cell.n_v0 == 0) throw std::logic_error("build_cell: V0 is empty");

    std::string why;
    const int check_window = 4 + 2 * static_cast<int>(std::llabs(cross(spec.v1, spec.v2)) +
                                                      std::llabs(spec.v1.x) + std::llabs(spec.v1.y));
    if (!tiles_window(cell, spec, check_window, &why))
        throw std::logic_error("build_cell: tiling check failed: " + why);
    if (!recovers_vertex_set(cell, spec, check_window, &why))
        throw std::logic_error("build_cell: V0 recovery check failed: " + why);
    return cell;
}

bool tiles_window(const PeriodicityCell& cell, const VertexSetSpec& spec, int window,
                  std::string* why) {
    std::int64_t dmin = 0, dmax = 0;
    if (spec.kind == VertexSetKind::ZPeriodic) transverse_bounds(spec, dmin, dmax);
    for (int j = -window; j <= window; ++j) {
        for (int i = -window; i <= window; ++i) {
            const IVec2 p{i, j};
            if (spec.kind == VertexSetKind::ZPeriodic && !in_strip(p, spec, dmin, dmax)) continue;
            int hits = 0;
            for (const IVec2& r : cell.q0_cells) {
                if (spec.kind == VertexSetKind::Z2Periodic) {
                    if (on_z2_orbit(p, r, spec.v1, spec.v2)) ++hits;
                } else {
                    if (on_z_orbit(p, r, spec.v1)) ++hits;
                }
            }
            if (hits != 1) {
                if (why)
                    *why = "cell (" + std::to_string(i) + "," + std::to_string(j) + ") covered " +
                           std::to_string(hits) + " times";
                return false;
            }
        }
    }
    return true;
}

bool recovers_vertex_set(const PeriodicityCell& cell, const VertexSetSpec& spec, int window,
                         std::string* why) {
    for (int j = -window; j <= window; ++j) {
        for (int i = -window; i <= window; ++i) {
            const IVec2 p{i, j};
            int hits = 0;
            for (const IVec2& r : cell.v0) {
                if (spec.kind == VertexSetKind::Z2Periodic) {
                    if (on_z2_orbit(p, r, spec.v1, spec.v2)) ++hits;
                } else {
                    if (on_z_orbit(p, r, spec.v1)) ++hits;
                }
            }
            const int want = spec.contains(p) ? 1 : 0;
            if (hits != want) {
                if (why)
                    *why = "vertex (" + std::to_string(i) + "," + std::to_string(j) + ") hit " +
                           std::to_string(hits) + " times, expected " + std::to_string(want);
                return false;
            }
        }
    }
    return true;
}

std::vector<int> materialize(const VertexSetSpec& spec, const Grid& grid) {
    spec.validate();
    std::vector<int> out;
    const int W = grid.spec().window;
    for (int j = -W; j <= W; ++j)
        for (int i = -W; i <= W; ++i)
            if (spec.contains({i, j})) out.push_back(grid.vertex_index({i, j}));
    std::sort(out.begin(), out.end());
    return out;
}

VertexSetSpec build_strip_set(const VertexSetSpec& base, double R, double epsilon) {
    if (base.kind != VertexSetKind::ZPeriodic)
        throw std::invalid_argument("build_strip_set: base must be Z-periodic");
    if (!(R > 0.0) || !(epsilon > 0.0))
        throw std::invalid_argument("build_strip_set: R and epsilon must be > 0");
    const IVec2 vp = perp(base.v1);
    const int imax = static_cast<int>(std::floor(R / epsilon + 1e-12));
    std::vector<IVec2> pts;
    for (int i = -imax; i <= imax; ++i)
        for (const IVec2& b : base.base) pts.push_back(add(b, scale(i, vp)));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](IVec2 a, IVec2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    return VertexSetSpec::z_periodic(std::move(pts), base.v1);
}

std::pair<double, double> beta_for_theorem(BetaCase c, const PeriodicityCell& cell, IVec2 v,
                                           double epsilon) {
    const double alpha = 0.5;
    const double ratio = static_cast<double>(cell.n_vertices_q0) / cell.n_v0;
    switch (c) {
        case BetaCase::Z2:
        case BetaCase::ZStrip:
            return {alpha, ratio * epsilon};
        case BetaCase::ZLine:
            return {alpha, std::sqrt(static_cast<double>(norm_sq(v))) / cell.n_v0};
    }
    return {alpha, 0.0};
}

}  // namespace gridnls
