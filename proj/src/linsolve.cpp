#include "dcv/linsolve.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dcv/ops.hpp"

namespace dcv {

void SolverConfig::validate() const {
    if (!(tolerance > 0.0 && tolerance <= 1e-2))
        throw std::invalid_argument("SolverConfig: tolerance must lie in (0, 1e-2]");
    if (max_iterations < 0)
        throw std::invalid_argument("SolverConfig: max_iterations must be >= 0");
}

int SolverConfig::resolve_max_iterations(int n) const {
    return max_iterations > 0 ? max_iterations : 50 * n;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

std::vector<double> conjugate_residual(const LinearOperator& op,
                                       const std::vector<double>& b,
                                       const SolverConfig& cfg, int max_iterations,
                                       SolveReport& report) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = op.size();
    std::vector<double> x(n, 0.0);

    report = SolveReport{};

    // Jacobi scaling: solve (S A S) y = S b with S = diag^{-1/2}, x = S y.
    std::vector<double> scale;
    const bool scaled = cfg.preconditioner == Preconditioner::Diagonal;
    if (scaled) {
        scale = op.diagonal();
        for (double& d : scale) {
            if (!(d > 0.0))
                throw std::runtime_error("conjugate_residual: non-positive diagonal");
            d = 1.0 / std::sqrt(d);
        }
    }
    auto apply_scaled = [&](const std::vector<double>& in, std::vector<double>& out,
                            std::vector<double>& tmp) {
        if (!scaled) {
            op.apply(in.data(), out.data());
        } else {
            for (std::size_t i = 0; i < n; ++i) tmp[i] = scale[i] * in[i];
            op.apply(tmp.data(), out.data());
            for (std::size_t i = 0; i < n; ++i) out[i] *= scale[i];
        }
        ++report.operator_applications;
    };

    std::vector<double> bs = b;
    if (scaled)
        for (std::size_t i = 0; i < n; ++i) bs[i] *= scale[i];

    const double bnorm = norm(bs);
    if (bnorm == 0.0) {
        report.converged = true;
        report.final_relative_residual = 0.0;
        report.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return x;
    }

    std::vector<double> r = bs, p = bs, ar(n), ap(n), tmp(scaled ? n : 0);
    apply_scaled(r, ar, tmp);
    ap = ar;
    double r_ar = dot(r, ar);
    double rel = norm(r) / bnorm;
    report.residual_history.push_back(rel);

    int it = 0;
    for (; it < max_iterations && rel > cfg.tolerance; ++it) {
        const double ap_ap = dot(ap, ap);
        if (!(ap_ap > 0.0) || !(r_ar > 0.0)) break;  // stagnation / roundoff floor
        const double alpha = r_ar / ap_ap;
        for (std::size_t i = 0; i < n; ++i) x[i] += alpha * p[i];
        for (std::size_t i = 0; i < n; ++i) r[i] -= alpha * ap[i];
        rel = norm(r) / bnorm;
        report.residual_history.push_back(rel);
        if (rel <= cfg.tolerance) {
            ++it;
            break;
        }
        apply_scaled(r, ar, tmp);
        const double r_ar_new = dot(r, ar);
        const double beta = r_ar_new / r_ar;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
        for (std::size_t i = 0; i < n; ++i) ap[i] = ar[i] + beta * ap[i];
        r_ar = r_ar_new;
    }

    report.iterations = it;
    report.final_relative_residual = rel;
    report.converged = rel <= cfg.tolerance;
    if (scaled)
        for (std::size_t i = 0; i < n; ++i) x[i] *= scale[i];
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return x;
}

namespace {

// N = -sum_a D_a^outer D_a^inner, where the inner rule matches the field's
// parity along axis a and the outer rule is its negative transpose. Positive
// semidefinite by construction.
class CompositeLaplacian final : public LinearOperator {
  public:
    CompositeLaplacian(const Grid& g, std::array<BoundaryRule, 3> inner)
        : grid_(g), inner_(inner), d1_(g.cell_count()), d2_(g.cell_count()) {
        for (int a = 0; a < 3; ++a)
            outer_[a] = inner_[a] == BoundaryRule::MirrorOdd ? BoundaryRule::MirrorEven
                                                             : BoundaryRule::MirrorOdd;
    }

    std::size_t size() const override { return grid_.cell_count(); }

    void apply(const double* x, double* y) const override {
        const std::size_t nc = grid_.cell_count();
        for (std::size_t i = 0; i < nc; ++i) y[i] = 0.0;
        for (int a = 0; a < 3; ++a) {
            derivative_into(grid_, x, d1_.data(), a, inner_[a]);
            derivative_into(grid_, d1_.data(), d2_.data(), a, outer_[a]);
            for (std::size_t i = 0; i < nc; ++i) y[i] -= d2_[i];
        }
    }

    std::vector<double> diagonal() const override {
        // every first-difference column has exactly two entries of
        // magnitude 1/(2h) per axis
        const double d = 3.0 / (2.0 * grid_.h * grid_.h);
        return std::vector<double>(grid_.cell_count(), d);
    }

  private:
    Grid grid_;
    std::array<BoundaryRule, 3> inner_;
    std::array<BoundaryRule, 3> outer_;
    mutable std::vector<double> d1_, d2_;
};

// N = grad_odd^T A grad_odd, applied as -div_even(A grad_odd x).
class EllipticOperator final : public LinearOperator {
  public:
    EllipticOperator(const TensorField& A)
        : A_(&A), grid_(A.grid) {
        for (auto& g : g_) g.resize(grid_.cell_count());
        w_.resize(grid_.cell_count());
    }

    std::size_t size() const override { return grid_.cell_count(); }

    void apply(const double* x, double* y) const override {
        const std::size_t nc = grid_.cell_count();
        for (int a = 0; a < 3; ++a)
            derivative_into(grid_, x, g_[a].data(), a, BoundaryRule::MirrorOdd);
        for (int a = 0; a < 3; ++a) {
            const double* m = A_->m.data();
            for (std::size_t i = 0; i < nc; ++i)
                w_[i] = m[9 * i + 3 * a] * g_[0][i] + m[9 * i + 3 * a + 1] * g_[1][i] +
                        m[9 * i + 3 * a + 2] * g_[2][i];
            derivative_into(grid_, w_.data(), g_[a].data(), a, BoundaryRule::MirrorEven);
        }
        for (std::size_t i = 0; i < nc; ++i)
            y[i] = -(g_[0][i] + g_[1][i] + g_[2][i]);
    }

    std::vector<double> diagonal() const override {
        // diag_j = sum_m c_{m,j}^T A(m) c_{m,j} where c_{m,j} collects the
        // gradient-stencil coefficients of cell j at cell m
        const Grid& g = grid_;
        const int n = g.n;
        const double c = 1.0 / (2.0 * g.h);
        std::vector<double> diag(g.cell_count(), 0.0);
        auto quad = [&](std::size_t m, const std::array<double, 3>& v) {
            const double* a = &A_->m[9 * m];
            return v[0] * (a[0] * v[0] + a[1] * v[1] + a[2] * v[2]) +
                   v[1] * (a[3] * v[0] + a[4] * v[1] + a[5] * v[2]) +
                   v[2] * (a[6] * v[0] + a[7] * v[1] + a[8] * v[2]);
        };
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) {
                    const std::size_t cell = g.idx(i, j, k);
                    const int t[3] = {i, j, k};
                    double total = 0.0;
                    // neighbor rows m = cell +- e_a
                    for (int a = 0; a < 3; ++a) {
                        const std::size_t st = a == 0 ? 1
                                             : a == 1 ? static_cast<std::size_t>(n)
                                                      : static_cast<std::size_t>(n) * n;
                        if (t[a] > 0) {
                            std::array<double, 3> v{0, 0, 0};
                            v[a] = c;  // row t[a]-1 takes +c from x_j (both closures)
                            total += quad(cell - st, v);
                        }
                        if (t[a] < n - 1) {
                            std::array<double, 3> v{0, 0, 0};
                            v[a] = -c;
                            total += quad(cell + st, v);
                        }
                    }
                    // self row: boundary closures put a coefficient on x_j itself
                    std::array<double, 3> v{0, 0, 0};
                    bool any = false;
                    for (int a = 0; a < 3; ++a) {
                        if (t[a] == 0) v[a] = c, any = true;
                        if (t[a] == n - 1) v[a] = -c, any = true;
                    }
                    if (any) total += quad(cell, v);
                    diag[cell] = total;
                }
        return diag;
    }

  private:
    const TensorField* A_;
    Grid grid_;
    mutable std::array<std::vector<double>, 3> g_;
    mutable std::vector<double> w_;
};

}  // namespace

std::pair<ScalarField, SolveReport> poisson_dirichlet(const ScalarField& rhs,
                                                      const SolverConfig& cfg) {
    cfg.validate();
    CompositeLaplacian op(rhs.grid, {BoundaryRule::MirrorOdd, BoundaryRule::MirrorOdd,
                                     BoundaryRule::MirrorOdd});
    std::vector<double> b(rhs.v.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = -rhs.v[i];
    SolveReport rep;
    ScalarField q(rhs.grid);
    q.v = conjugate_residual(op, b, cfg, cfg.resolve_max_iterations(rhs.grid.n), rep);
    return {std::move(q), std::move(rep)};
}

std::pair<ScalarField, SolveReport> elliptic_divform(const TensorField& A,
                                                     const ScalarField& rhs,
                                                     const SolverConfig& cfg) {
    cfg.validate();
    if (!(A.grid == rhs.grid))
        throw std::invalid_argument("elliptic_divform: coefficient and rhs grids differ");
    const auto bounds = spd_check(A);
    if (!(bounds.lambda_min > 0.0))
        throw std::invalid_argument(
            "elliptic_divform: coefficient not elliptic (lambda_min = " +
            std::to_string(bounds.lambda_min) + ")");
    double skew = 0.0, scale = 0.0;
    for (std::size_t r = 0; r < A.grid.cell_count(); ++r) {
        const double* m = &A.m[9 * r];
        skew = std::max({skew, std::abs(m[1] - m[3]), std::abs(m[2] - m[6]),
                         std::abs(m[5] - m[7])});
        for (int e = 0; e < 9; ++e) scale = std::max(scale, std::abs(m[e]));
    }
    if (skew > 1e-12 * scale)
        throw std::invalid_argument(
            "elliptic_divform: coefficient must be symmetric per cell (max skew " +
            std::to_string(skew) + ")");

    EllipticOperator op(A);
    std::vector<double> b(rhs.v.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = -rhs.v[i];
    SolveReport rep;
    ScalarField q(rhs.grid);
    q.v = conjugate_residual(op, b, cfg, cfg.resolve_max_iterations(rhs.grid.n), rep);
    return {std::move(q), std::move(rep)};
}

std::pair<VectorField, SolveReport> vector_poisson(const VectorField& rhs,
                                                   const SolverConfig& cfg) {
    cfg.validate();
    VectorField phi(rhs.grid);
    SolveReport total;
    total.converged = true;
    for (int c = 0; c < 3; ++c) {
        std::array<BoundaryRule, 3> inner;
        for (int a = 0; a < 3; ++a)
            inner[a] = (a == c) ? BoundaryRule::MirrorOdd : BoundaryRule::MirrorEven;
        CompositeLaplacian op(rhs.grid, inner);
        SolveReport rep;
        phi.comp[c] = conjugate_residual(op, rhs.comp[c], cfg,
                                         cfg.resolve_max_iterations(rhs.grid.n), rep);
        total.iterations += rep.iterations;
        total.operator_applications += rep.operator_applications;
        total.wall_time_seconds += rep.wall_time_seconds;
        total.final_relative_residual =
            std::max(total.final_relative_residual, rep.final_relative_residual);
        total.converged = total.converged && rep.converged;
    }
    return {std::move(phi), std::move(total)};
}

}  // namespace dcv
