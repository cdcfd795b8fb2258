#pragma once

#include <array>
#include <string>

#include "dcv/grid.hpp"

namespace dcv {

/// Per-cell 3x3 matrix coefficient, row-major, 9 entries per cell.
struct TensorField {
    Grid grid;
    std::vector<double> m;

    TensorField() = default;
    explicit TensorField(const Grid& g) : grid(g), m(9 * g.cell_count(), 0.0) {}

    double& at(std::size_t cell, int r, int c) { return m[9 * cell + 3 * r + c]; }
    double at(std::size_t cell, int r, int c) const { return m[9 * cell + 3 * r + c]; }

    static TensorField identity(const Grid& g);
    static TensorField scaled_identity(const Grid& g, double s);
    static TensorField diagonal(const Grid& g, const std::array<double, 3>& d);
};

/// Generator parameters for coefficient fields A(x), B(x).
///
/// kind selects the scalar profile p(x) multiplying diag(anisotropy):
///   constant:  p = 1
///   smooth:    p = 1 + c sin(pi x1) sin(pi x2) sin(pi x3)
///   lipschitz: p = 1 + c |x - x0|
///   holder:    p = 1 + c |x - x0|^alpha,  alpha in (0,1)
///
/// x0 is snapped to the nearest cell center when the field is realized, so
/// the rough point of the holder/lipschitz profiles sits on the lattice.
struct CoeffFamily {
    enum class Kind { Constant, Smooth, Lipschitz, Holder };

    Kind kind = Kind::Constant;
    double alpha = 0.5;                              // holder only
    double amplitude = 0.0;                          // c >= 0 for ellipticity
    std::array<double, 3> center = {0.5, 0.5, 0.5};  // x0
    std::array<double, 3> anisotropy = {1.0, 1.0, 1.0};

    static CoeffFamily constant(const std::array<double, 3>& aniso = {1, 1, 1});
    static CoeffFamily smooth(double amplitude,
                              const std::array<double, 3>& aniso = {1, 1, 1});
    static CoeffFamily lipschitz(double amplitude,
                                 const std::array<double, 3>& aniso = {1, 1, 1});
    static CoeffFamily holder(double alpha, double amplitude,
                              const std::array<double, 3>& aniso = {1, 1, 1});

    std::string describe() const;
};

/// Realize a coefficient family on a grid. Throws if the family parameters
/// are invalid or the result fails positive definiteness (naming the cell).
TensorField make_coefficient(const CoeffFamily& family, const Grid& grid);

struct SpdBounds {
    double lambda_min;
    double lambda_max;
};

/// Min/max over cells of the eigenvalues of the symmetric part (M+M^T)/2.
/// lambda_min > 0 certifies the ellipticity bounds.
SpdBounds spd_check(const TensorField& M);

/// Eigenvalues (ascending) of one symmetric 3x3 matrix, row-major.
std::array<double, 3> sym3_eigenvalues(const std::array<double, 9>& s);

/// Per-cell 3x3 inverse. Throws if any cell has |det| < 1e-10, naming it.
TensorField invert(const TensorField& M);

/// Per-cell product A(x) * B(x)^{-1}.
TensorField compose(const TensorField& A, const TensorField& B);

/// Per-cell product A(x) * B(x).
TensorField multiply(const TensorField& A, const TensorField& B);

/// Scalar profile p(x) of a family sampled on a grid (diagnostics; the
/// tensor is diag(anisotropy) * p).
ScalarField family_profile(const CoeffFamily& family, const Grid& grid);

/// The family center snapped to the nearest cell center of `grid`.
std::array<double, 3> snapped_center(const CoeffFamily& family, const Grid& grid);

}  // namespace dcv
