#include "gridnls/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gridnls {

GridField zero_field(const Grid& grid) { return {&grid, Vec(grid.dof(), 0.0)}; }

double norm_r(const GridField& u, double r) {
    if (r < 1.0) throw std::invalid_argument("norm_r: r must be >= 1");
    const std::vector<double>& w = u.grid->lumped_weights();
    double acc = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i)
        acc += w[i] * std::pow(std::abs(u.values[i]), r);
    return std::pow(acc, 1.0 / r);
}

double field_mass(const GridField& u) { return lumped_inner(*u.grid, u.values, u.values); }

double derivative_sq(const GridField& u) {
    const Grid& g = *u.grid;
    const double h = g.spec().h();
    double acc = 0.0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto chain = g.edge_chain(e);
        for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
            const double d = u.values[chain[t + 1]] - u.values[chain[t]];
            acc += d * d / h;
        }
    }
    return acc;
}

double lumped_inner(const Grid& grid, const Vec& a, const Vec& b) {
    const std::vector<double>& w = grid.lumped_weights();
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += w[i] * a[i] * b[i];
    return acc;
}

GridField restrict_profile(const std::function<double(double, double)>& f, const Grid& grid) {
    GridField u = zero_field(grid);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const auto p = grid.dof_point(i);
        u.values[i] = f(p[0], p[1]);
    }
    return u;
}

void write_field(const GridField& u, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_field: cannot open " + path);
    char header[128];
    std::snprintf(header, sizeof(header), "gridfield eps=%.17g W=%d m=%d\n",
                  u.grid->spec().epsilon, u.grid->spec().window, u.grid->spec().m);
    out << header;
    out.write(reinterpret_cast<const char*>(u.values.data()),
              static_cast<std::streamsize>(u.values.size() * sizeof(double)));
}

FieldDump read_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_field: cannot open " + path);
    std::string header;
    std::getline(in, header);
    FieldDump dump;
    if (std::sscanf(header.c_str(), "gridfield eps=%lg W=%d m=%d", &dump.spec.epsilon,
                    &dump.spec.window, &dump.spec.m) != 3)
        throw std::runtime_error("read_field: bad header in " + path);
    dump.spec.validate();
    const GridSpec& s = dump.spec;
    const std::size_t n =
        static_cast<std::size_t>(s.vertex_count()) + static_cast<std::size_t>(s.edge_count()) * s.m;
    dump.values.resize(n);
    in.read(reinterpret_cast<char*>(dump.values.data()),
            static_cast<std::streamsize>(n * sizeof(double)));
    if (!in) throw std::runtime_error("read_field: truncated payload in " + path);
    return dump;
}

}  // namespace gridnls
