#pragma once

#include <vector>

#include "dcv/coeff.hpp"
#include "dcv/grid.hpp"

namespace dcv {

enum class Preconditioner { None, Diagonal };

struct SolverConfig {
    double tolerance = 1e-10;  // relative l2 residual
    int max_iterations = 0;    // 0 -> 50 * n
    Preconditioner preconditioner = Preconditioner::None;

    void validate() const;
    int resolve_max_iterations(int n) const;
};

struct SolveReport {
    int iterations = 0;
    double final_relative_residual = 0.0;
    bool converged = true;
    long operator_applications = 0;
    double wall_time_seconds = 0.0;
    std::vector<double> residual_history;
};

/// Matrix-free symmetric positive (semi)definite operator.
class LinearOperator {
  public:
    virtual ~LinearOperator() = default;
    virtual std::size_t size() const = 0;
    virtual void apply(const double* x, double* y) const = 0;
    /// Strictly positive diagonal, for Jacobi scaling.
    virtual std::vector<double> diagonal() const = 0;
};

/// Conjugate-residual iteration: minimizes the l2 residual over nested
/// Krylov spaces, so the reported residual history is non-increasing.
/// Starting from x = 0, iterates stay orthogonal to the operator's null
/// space, which makes consistent singular systems safe.
std::vector<double> conjugate_residual(const LinearOperator& op,
                                       const std::vector<double>& b,
                                       const SolverConfig& cfg, int max_iterations,
                                       SolveReport& report);

/// Solve div_even(grad_odd q) = rhs with a homogeneous Dirichlet value of q
/// on all faces (odd-mirror ghosts). Adjoint-consistent composite stencil;
/// the operator is the 7-point second difference of the paired first
/// differences.
std::pair<ScalarField, SolveReport> poisson_dirichlet(const ScalarField& rhs,
                                                      const SolverConfig& cfg = {});

/// Solve div_even(A grad_odd q) = rhs for symmetric positive definite A.
/// Rejects coefficients whose symmetric part is not positive definite and
/// coefficients with a significant skew part.
std::pair<ScalarField, SolveReport> elliptic_divform(const TensorField& A,
                                                     const ScalarField& rhs,
                                                     const SolverConfig& cfg = {});

/// Three scalar solves, one per component: the component normal to a face
/// carries odd mirrors (zero value), the tangential ones even mirrors (zero
/// normal derivative). Returns phi with -lap(phi) = rhs componentwise.
std::pair<VectorField, SolveReport> vector_poisson(const VectorField& rhs,
                                                   const SolverConfig& cfg = {});

}  // namespace dcv
