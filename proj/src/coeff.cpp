#include "dcv/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dcv {

TensorField TensorField::identity(const Grid& g) { return scaled_identity(g, 1.0); }

TensorField TensorField::scaled_identity(const Grid& g, double s) {
    return diagonal(g, {s, s, s});
}

TensorField TensorField::diagonal(const Grid& g, const std::array<double, 3>& d) {
    TensorField t(g);
    const std::size_t nc = g.cell_count();
    for (std::size_t r = 0; r < nc; ++r)
        for (int a = 0; a < 3; ++a) t.m[9 * r + 4 * a] = d[a];
    return t;
}

CoeffFamily CoeffFamily::constant(const std::array<double, 3>& aniso) {
    CoeffFamily f;
    f.kind = Kind::Constant;
    f.anisotropy = aniso;
    return f;
}

CoeffFamily CoeffFamily::smooth(double amplitude, const std::array<double, 3>& aniso) {
    CoeffFamily f;
    f.kind = Kind::Smooth;
    f.amplitude = amplitude;
    f.anisotropy = aniso;
    return f;
}

CoeffFamily CoeffFamily::lipschitz(double amplitude, const std::array<double, 3>& aniso) {
    CoeffFamily f;
    f.kind = Kind::Lipschitz;
    f.amplitude = amplitude;
    f.anisotropy = aniso;
    return f;
}

CoeffFamily CoeffFamily::holder(double alpha, double amplitude,
                                const std::array<double, 3>& aniso) {
    CoeffFamily f;
    f.kind = Kind::Holder;
    f.alpha = alpha;
    f.amplitude = amplitude;
    f.anisotropy = aniso;
    return f;
}

std::string CoeffFamily::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Constant: os << "constant"; break;
        case Kind::Smooth: os << "smooth(c=" << amplitude << ")"; break;
        case Kind::Lipschitz: os << "lipschitz(c=" << amplitude << ")"; break;
        case Kind::Holder:
            os << "holder(alpha=" << alpha << ",c=" << amplitude << ")";
            break;
    }
    os << " aniso(" << anisotropy[0] << "," << anisotropy[1] << "," << anisotropy[2]
       << ")";
    return os.str();
}

std::array<double, 3> snapped_center(const CoeffFamily& family, const Grid& grid) {
    std::array<double, 3> c;
    for (int a = 0; a < 3; ++a) {
        int i = static_cast<int>(std::floor(family.center[a] * grid.n));
        i = std::clamp(i, 0, grid.n - 1);
        // pick the nearer of the two candidate centers
        if (i + 1 < grid.n &&
            std::abs(grid.center(i + 1) - family.center[a]) <
                std::abs(grid.center(i) - family.center[a]))
            ++i;
        c[a] = grid.center(i);
    }
    return c;
}

namespace {

void validate_family(const CoeffFamily& f) {
    if (f.kind == CoeffFamily::Kind::Holder && !(f.alpha > 0.0 && f.alpha < 1.0))
        throw std::invalid_argument("CoeffFamily: holder kind requires alpha in (0,1)");
    for (double s : f.anisotropy)
        if (!(s > 0.0))
            throw std::invalid_argument("CoeffFamily: anisotropy scales must be positive");
}

}  // namespace

ScalarField family_profile(const CoeffFamily& family, const Grid& grid) {
    validate_family(family);
    const auto x0 = snapped_center(family, grid);
    const double c = family.amplitude;
    const double pi = std::numbers::pi;
    switch (family.kind) {
        case CoeffFamily::Kind::Constant:
            return sample_scalar(grid, [](double, double, double) { return 1.0; });
        case CoeffFamily::Kind::Smooth:
            return sample_scalar(grid, [=](double x, double y, double z) {
                return 1.0 + c * std::sin(pi * x) * std::sin(pi * y) * std::sin(pi * z);
            });
        case CoeffFamily::Kind::Lipschitz:
            return sample_scalar(grid, [=](double x, double y, double z) {
                const double dx = x - x0[0], dy = y - x0[1], dz = z - x0[2];
                return 1.0 + c * std::sqrt(dx * dx + dy * dy + dz * dz);
            });
        case CoeffFamily::Kind::Holder:
            return sample_scalar(grid, [=](double x, double y, double z) {
                const double dx = x - x0[0], dy = y - x0[1], dz = z - x0[2];
                const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
                return 1.0 + c * std::pow(r, family.alpha);
            });
    }
    throw std::logic_error("family_profile: unknown kind");
}

TensorField make_coefficient(const CoeffFamily& family, const Grid& grid) {
    ScalarField p = family_profile(family, grid);
    TensorField t(grid);
    const std::size_t nc = grid.cell_count();
    for (std::size_t r = 0; r < nc; ++r)
        for (int a = 0; a < 3; ++a)
            t.m[9 * r + 4 * a] = family.anisotropy[a] * p.v[r];

    // generated tensors are diagonal: positive definite iff every diagonal
    // entry is positive
    for (std::size_t r = 0; r < nc; ++r)
        for (int a = 0; a < 3; ++a)
            if (!(t.m[9 * r + 4 * a] > 0.0)) {
                const int n = grid.n;
                const int i = static_cast<int>(r % n);
                const int j = static_cast<int>((r / n) % n);
                const int k = static_cast<int>(r / (static_cast<std::size_t>(n) * n));
                std::ostringstream msg;
                msg << "make_coefficient: not positive definite at cell (" << i << ","
                    << j << "," << k << "), diagonal entry " << a << " = "
                    << t.m[9 * r + 4 * a];
                throw std::invalid_argument(msg.str());
            }
    return t;
}

std::array<double, 3> sym3_eigenvalues(const std::array<double, 9>& s) {
    // closed-form eigenvalues of a symmetric 3x3 matrix (trigonometric method)
    const double a = s[0], b = s[4], c = s[8];
    const double d = s[1], e = s[5], f = s[2];
    const double p1 = d * d + e * e + f * f;
    if (p1 == 0.0) {
        std::array<double, 3> ev{a, b, c};
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    const double q = (a + b + c) / 3.0;
    const double p2 =
        (a - q) * (a - q) + (b - q) * (b - q) + (c - q) * (c - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    // B = (S - q I)/p ; r = det(B)/2 clamped into [-1,1]
    const double b00 = (a - q) / p, b11 = (b - q) / p, b22 = (c - q) / p;
    const double b01 = d / p, b12 = e / p, b02 = f / p;
    double r = 0.5 * (b00 * (b11 * b22 - b12 * b12) - b01 * (b01 * b22 - b12 * b02) +
                      b02 * (b01 * b12 - b11 * b02));
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double pi = std::numbers::pi;
    const double l1 = q + 2.0 * p * std::cos(phi);
    const double l3 = q + 2.0 * p * std::cos(phi + 2.0 * pi / 3.0);
    const double l2 = 3.0 * q - l1 - l3;
    std::array<double, 3> ev{l3, l2, l1};
    std::sort(ev.begin(), ev.end());
    return ev;
}

SpdBounds spd_check(const TensorField& M) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t nc = M.grid.cell_count();
    for (std::size_t r = 0; r < nc; ++r) {
        const double* m = &M.m[9 * r];
        const std::array<double, 9> s{
            m[0], 0.5 * (m[1] + m[3]), 0.5 * (m[2] + m[6]),
            0.5 * (m[1] + m[3]), m[4], 0.5 * (m[5] + m[7]),
            0.5 * (m[2] + m[6]), 0.5 * (m[5] + m[7]), m[8]};
        const auto ev = sym3_eigenvalues(s);
        lo = std::min(lo, ev[0]);
        hi = std::max(hi, ev[2]);
    }
    return {lo, hi};
}

TensorField invert(const TensorField& M) {
    TensorField out(M.grid);
    const std::size_t nc = M.grid.cell_count();
    for (std::size_t r = 0; r < nc; ++r) {
        const double* m = &M.m[9 * r];
        const double c00 = m[4] * m[8] - m[5] * m[7];
        const double c01 = m[5] * m[6] - m[3] * m[8];
        const double c02 = m[3] * m[7] - m[4] * m[6];
        const double det = m[0] * c00 + m[1] * c01 + m[2] * c02;
        if (std::abs(det) < 1e-10) {
            const int n = M.grid.n;
            const int i = static_cast<int>(r % n);
            const int j = static_cast<int>((r / n) % n);
            const int k = static_cast<int>(r / (static_cast<std::size_t>(n) * n));
            std::ostringstream msg;
            msg << "invert: near-singular tensor at cell (" << i << "," << j << ","
                << k << "), |det| = " << std::abs(det);
            throw std::invalid_argument(msg.str());
        }
        const double inv = 1.0 / det;
        double* o = &out.m[9 * r];
        o[0] = c00 * inv;
        o[1] = (m[2] * m[7] - m[1] * m[8]) * inv;
        o[2] = (m[1] * m[5] - m[2] * m[4]) * inv;
        o[3] = c01 * inv;
        o[4] = (m[0] * m[8] - m[2] * m[6]) * inv;
        o[5] = (m[2] * m[3] - m[0] * m[5]) * inv;
        o[6] = c02 * inv;
        o[7] = (m[1] * m[6] - m[0] * m[7]) * inv;
        o[8] = (m[0] * m[4] - m[1] * m[3]) * inv;
    }
    return out;
}

TensorField multiply(const TensorField& A, const TensorField& B) {
    if (!(A.grid == B.grid))
        throw std::invalid_argument("multiply: tensors live on different grids");
    TensorField out(A.grid);
    const std::size_t nc = A.grid.cell_count();
    for (std::size_t r = 0; r < nc; ++r) {
        const double* a = &A.m[9 * r];
        const double* b = &B.m[9 * r];
        double* o = &out.m[9 * r];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                o[3 * i + j] = a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] +
                               a[3 * i + 2] * b[6 + j];
    }
    return out;
}

TensorField compose(const TensorField& A, const TensorField& B) {
    return multiply(A, invert(B));
}

}  // namespace dcv
