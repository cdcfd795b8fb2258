#include "dcv/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dcv {

std::array<double, 3> face_normal(Face f) {
    std::array<double, 3> nrm{0.0, 0.0, 0.0};
    nrm[face_axis(f)] = face_is_high(f) ? 1.0 : -1.0;
    return nrm;
}

Grid Grid::unit_cube(int n_cells_per_axis) {
    if (n_cells_per_axis < 4) {
        throw std::invalid_argument(
            "Grid::unit_cube: need n >= 4 cells per axis (got " +
            std::to_string(n_cells_per_axis) + ")");
    }
    Grid g;
    g.n = n_cells_per_axis;
    g.h = 1.0 / n_cells_per_axis;
    return g;
}

namespace {

[[noreturn]] void throw_nonfinite(const Grid& g, int i, int j, int k,
                                  int component) {
    auto c = g.cell_center(i, j, k);
    std::ostringstream msg;
    msg << "sample: non-finite value at cell (" << i << "," << j << "," << k
        << "), center (" << c[0] << "," << c[1] << "," << c[2] << ")";
    if (component >= 0) msg << ", component " << component;
    throw std::invalid_argument(msg.str());
}

}  // namespace

ScalarField sample_scalar(const Grid& grid, const ScalarFn& fn) {
    ScalarField s(grid);
    for (int k = 0; k < grid.n; ++k)
        for (int j = 0; j < grid.n; ++j)
            for (int i = 0; i < grid.n; ++i) {
                auto c = grid.cell_center(i, j, k);
                double val = fn(c[0], c[1], c[2]);
                if (!std::isfinite(val)) throw_nonfinite(grid, i, j, k, -1);
                s.v[grid.idx(i, j, k)] = val;
            }
    return s;
}

VectorField sample_vector(const Grid& grid, const VectorFn& fn) {
    VectorField u(grid);
    for (int k = 0; k < grid.n; ++k)
        for (int j = 0; j < grid.n; ++j)
            for (int i = 0; i < grid.n; ++i) {
                auto c = grid.cell_center(i, j, k);
                auto val = fn(c[0], c[1], c[2]);
                for (int d = 0; d < 3; ++d) {
                    if (!std::isfinite(val[d])) throw_nonfinite(grid, i, j, k, d);
                    u.comp[d][grid.idx(i, j, k)] = val[d];
                }
            }
    return u;
}

double max_abs(const ScalarField& s) {
    double m = 0.0;
    for (double x : s.v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const VectorField& u) {
    double m = 0.0;
    for (const auto& c : u.comp)
        for (double x : c) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace dcv
