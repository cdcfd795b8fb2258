#include "dcv/ops.hpp"

#include <cmath>
#include <stdexcept>

#include "dcv/coeff.hpp"

namespace dcv {

VectorRules uniform_rules(BoundaryRule r) {
    VectorRules t;
    for (auto& row : t.rule) row = {r, r, r};
    return t;
}

VectorRules potential_rules() {
    VectorRules t;
    for (int c = 0; c < 3; ++c)
        for (int a = 0; a < 3; ++a)
            t.rule[c][a] = (a == c) ? BoundaryRule::MirrorOdd : BoundaryRule::MirrorEven;
    return t;
}

VectorRules field_rules() {
    VectorRules t;
    for (int c = 0; c < 3; ++c)
        for (int a = 0; a < 3; ++a)
            t.rule[c][a] = (a == c) ? BoundaryRule::MirrorEven : BoundaryRule::MirrorOdd;
    return t;
}

namespace {

struct Closure {
    // out_lo = c*(a0*q0 + a1*q1 + a2*q2), out_hi mirrored.
    double a0, a1, a2;
    double b0, b1, b2;
};

Closure closure_for(BoundaryRule rule) {
    switch (rule) {
        case BoundaryRule::OneSided2:
            return {-3.0, 4.0, -1.0, 3.0, -4.0, 1.0};
        case BoundaryRule::MirrorOdd:
            return {1.0, 1.0, 0.0, -1.0, -1.0, 0.0};
        case BoundaryRule::MirrorEven:
            return {-1.0, 1.0, 0.0, 1.0, -1.0, 0.0};
    }
    return {};
}

}  // namespace

void derivative_into(const Grid& g, const double* in, double* out, int axis,
                     BoundaryRule rule) {
    const int n = g.n;
    const double c = 1.0 / (2.0 * g.h);
    const Closure cl = closure_for(rule);
    const std::size_t nn = static_cast<std::size_t>(n) * n;

    if (axis == 0) {
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                const std::size_t b = g.idx(0, j, k);
                out[b] = c * (cl.a0 * in[b] + cl.a1 * in[b + 1] + cl.a2 * in[b + 2]);
                for (int i = 1; i < n - 1; ++i)
                    out[b + i] = c * (in[b + i + 1] - in[b + i - 1]);
                out[b + n - 1] = c * (cl.b0 * in[b + n - 1] + cl.b1 * in[b + n - 2] +
                                      cl.b2 * in[b + n - 3]);
            }
    } else if (axis == 1) {
        const std::size_t st = n;
        for (int k = 0; k < n; ++k) {
            const std::size_t plane = static_cast<std::size_t>(k) * nn;
            for (int i = 0; i < n; ++i) {
                const std::size_t b = plane + i;
                out[b] = c * (cl.a0 * in[b] + cl.a1 * in[b + st] + cl.a2 * in[b + 2 * st]);
            }
            for (int j = 1; j < n - 1; ++j) {
                const std::size_t b = plane + static_cast<std::size_t>(j) * st;
                for (int i = 0; i < n; ++i)
                    out[b + i] = c * (in[b + i + st] - in[b + i - st]);
            }
            const std::size_t b = plane + static_cast<std::size_t>(n - 1) * st;
            for (int i = 0; i < n; ++i)
                out[b + i] = c * (cl.b0 * in[b + i] + cl.b1 * in[b + i - st] +
                                  cl.b2 * in[b + i - 2 * st]);
        }
    } else {
        const std::size_t st = nn;
        for (std::size_t r = 0; r < nn; ++r)
            out[r] = c * (cl.a0 * in[r] + cl.a1 * in[r + st] + cl.a2 * in[r + 2 * st]);
        for (int k = 1; k < n - 1; ++k) {
            const std::size_t b = static_cast<std::size_t>(k) * st;
            for (std::size_t r = 0; r < nn; ++r)
                out[b + r] = c * (in[b + r + st] - in[b + r - st]);
        }
        const std::size_t b = static_cast<std::size_t>(n - 1) * st;
        for (std::size_t r = 0; r < nn; ++r)
            out[b + r] = c * (cl.b0 * in[b + r] + cl.b1 * in[b + r - st] +
                              cl.b2 * in[b + r - 2 * st]);
    }
}

ScalarField derivative(const ScalarField& s, int axis, BoundaryRule rule) {
    ScalarField out(s.grid);
    derivative_into(s.grid, s.v.data(), out.v.data(), axis, rule);
    return out;
}

VectorField grad(const ScalarField& s, const StencilSpec& spec) {
    VectorField g(s.grid);
    for (int a = 0; a < 3; ++a)
        derivative_into(s.grid, s.v.data(), g.comp[a].data(), a, spec.boundary);
    return g;
}

ScalarField div(const VectorField& u, const StencilSpec& spec) {
    return div(u, {spec.boundary, spec.boundary, spec.boundary});
}

ScalarField div(const VectorField& u, const std::array<BoundaryRule, 3>& rules) {
    ScalarField d(u.grid);
    std::vector<double> tmp(u.grid.cell_count());
    for (int a = 0; a < 3; ++a) {
        derivative_into(u.grid, u.comp[a].data(), tmp.data(), a, rules[a]);
        for (std::size_t r = 0; r < tmp.size(); ++r) d.v[r] += tmp[r];
    }
    return d;
}

VectorField curl(const VectorField& u, const StencilSpec& spec) {
    return curl(u, uniform_rules(spec.boundary));
}

VectorField curl(const VectorField& u, const VectorRules& rules) {
    VectorField w(u.grid);
    std::vector<double> tmp(u.grid.cell_count());
    for (int c = 0; c < 3; ++c) {
        const int a = (c + 1) % 3;  // (curl u)_c = d(u_b)/da - d(u_a)/db
        const int b = (c + 2) % 3;
        derivative_into(u.grid, u.comp[b].data(), w.comp[c].data(), a, rules.rule[b][a]);
        derivative_into(u.grid, u.comp[a].data(), tmp.data(), b, rules.rule[a][b]);
        for (std::size_t r = 0; r < tmp.size(); ++r) w.comp[c][r] -= tmp[r];
    }
    return w;
}

VectorField apply_tensor(const TensorField& M, const VectorField& u) {
    if (!(M.grid == u.grid))
        throw std::invalid_argument("apply_tensor: tensor and vector live on different grids");
    VectorField out(u.grid);
    const std::size_t nc = u.grid.cell_count();
    for (std::size_t r = 0; r < nc; ++r) {
        const double* m = &M.m[9 * r];
        const double x = u.comp[0][r], y = u.comp[1][r], z = u.comp[2][r];
        out.comp[0][r] = m[0] * x + m[1] * y + m[2] * z;
        out.comp[1][r] = m[3] * x + m[4] * y + m[5] * z;
        out.comp[2][r] = m[6] * x + m[7] * y + m[8] * z;
    }
    return out;
}

double FaceTrace::max_abs() const {
    double m = 0.0;
    for (const auto& p : values)
        m = std::max({m, std::abs(p[0]), std::abs(p[1])});
    return m;
}

std::array<FaceTrace, 6> tangential_trace(const VectorField& u) {
    const Grid& g = u.grid;
    const int n = g.n;
    std::array<FaceTrace, 6> traces;
    for (int f = 0; f < 6; ++f) {
        Face face = static_cast<Face>(f);
        const int a = face_axis(face);
        const bool hi = face_is_high(face);
        const int t0 = (a == 0) ? 1 : 0;
        const int t1 = (a == 2) ? 1 : 2;
        FaceTrace& tr = traces[f];
        tr.face = face;
        tr.component = {t0, t1};
        tr.values.resize(static_cast<std::size_t>(n) * n);
        for (int q1 = 0; q1 < n; ++q1)
            for (int q0 = 0; q0 < n; ++q0) {
                int ijk0[3], ijk1[3];
                ijk0[a] = hi ? n - 1 : 0;
                ijk1[a] = hi ? n - 2 : 1;
                ijk0[t0] = ijk1[t0] = q0;
                ijk0[t1] = ijk1[t1] = q1;
                const std::size_t c0 = g.idx(ijk0[0], ijk0[1], ijk0[2]);
                const std::size_t c1 = g.idx(ijk1[0], ijk1[1], ijk1[2]);
                // linear extrapolation from centers h/2 and 3h/2 to the face
                tr.values[static_cast<std::size_t>(q1) * n + q0] = {
                    1.5 * u.comp[t0][c0] - 0.5 * u.comp[t0][c1],
                    1.5 * u.comp[t1][c0] - 0.5 * u.comp[t1][c1]};
            }
    }
    return traces;
}

double max_tangential_trace(const VectorField& u) {
    double m = 0.0;
    for (const auto& tr : tangential_trace(u)) m = std::max(m, tr.max_abs());
    return m;
}

ScalarField scalar_laplacian(const ScalarField& s) {
    VectorField g = grad(s, {BoundaryRule::MirrorOdd});
    return div(g, {BoundaryRule::MirrorEven, BoundaryRule::MirrorEven,
                   BoundaryRule::MirrorEven});
}

}  // namespace dcv
