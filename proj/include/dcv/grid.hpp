#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace dcv {

/// One of the six faces of the unit cube, identified by axis and side.
enum class Face { XLo = 0, XHi, YLo, YHi, ZLo, ZHi };

constexpr int face_axis(Face f) { return static_cast<int>(f) / 2; }
constexpr bool face_is_high(Face f) { return static_cast<int>(f) % 2 == 1; }

/// Outward unit normal of a cube face.
std::array<double, 3> face_normal(Face f);

/// Uniform cell-centered lattice on the unit cube [0,1]^3.
///
/// Cells are indexed (i,j,k) with i fastest in memory; the center of
/// cell (i,j,k) is ((i+1/2)h, (j+1/2)h, (k+1/2)h) with h = 1/n.
struct Grid {
    int n = 0;
    double h = 0.0;

    static Grid unit_cube(int n_cells_per_axis);

    std::size_t cell_count() const {
        return static_cast<std::size_t>(n) * n * n;
    }
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * n + j) * n + i;
    }
    double center(int i) const { return (i + 0.5) / static_cast<double>(n); }
    std::array<double, 3> cell_center(int i, int j, int k) const {
        return {center(i), center(j), center(k)};
    }

    bool operator==(const Grid&) const = default;
};

/// One real value per cell.
struct ScalarField {
    Grid grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid(g), v(g.cell_count(), 0.0) {}

    double& at(int i, int j, int k) { return v[grid.idx(i, j, k)]; }
    double at(int i, int j, int k) const { return v[grid.idx(i, j, k)]; }
};

/// Three real components per cell, stored one contiguous array per component.
struct VectorField {
    Grid grid;
    std::array<std::vector<double>, 3> comp;

    VectorField() = default;
    explicit VectorField(const Grid& g) : grid(g) {
        for (auto& c : comp) c.assign(g.cell_count(), 0.0);
    }

    double& at(int c, int i, int j, int k) { return comp[c][grid.idx(i, j, k)]; }
    double at(int c, int i, int j, int k) const { return comp[c][grid.idx(i, j, k)]; }
};

using ScalarFn = std::function<double(double, double, double)>;
using VectorFn = std::function<std::array<double, 3>(double, double, double)>;

/// Evaluate fn at every cell center. Throws if any sample is non-finite,
/// naming the offending cell.
ScalarField sample_scalar(const Grid& grid, const ScalarFn& fn);
VectorField sample_vector(const Grid& grid, const VectorFn& fn);

/// Max |value| over all cells (all components for vector fields).
double max_abs(const ScalarField& s);
double max_abs(const VectorField& u);

}  // namespace dcv
