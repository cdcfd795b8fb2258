#pragma once

#include <array>

#include "dcv/grid.hpp"

namespace dcv {

struct TensorField;  // coeff.hpp

/// How a centered first difference is closed at the two outermost cell
/// layers of its axis.
///
///  - OneSided2: second-order one-sided stencil; boundary-condition free.
///  - MirrorOdd: ghost = -(first cell); odd reflection across the face
///    (value pinned to zero on the face).
///  - MirrorEven: ghost = +(first cell); even reflection (zero normal
///    derivative at the face).
enum class BoundaryRule { OneSided2, MirrorOdd, MirrorEven };

struct StencilSpec {
    BoundaryRule boundary = BoundaryRule::OneSided2;
};

/// Per-component, per-axis boundary rules for vector-field operators.
/// rule[c][a] closes the derivative of component c along axis a.
struct VectorRules {
    std::array<std::array<BoundaryRule, 3>, 3> rule;
};

VectorRules uniform_rules(BoundaryRule r);

/// Rules for vector potentials: component c vanishes on faces normal to c
/// (odd), and has zero normal derivative on the other faces (even).
VectorRules potential_rules();

/// Rules for physical fields with zero tangential trace: component c is
/// even across faces normal to c and odd across the others.
VectorRules field_rules();

/// Centered first difference of `s` along `axis`, closed per `rule`.
ScalarField derivative(const ScalarField& s, int axis, BoundaryRule rule);

/// In-place core used by the solvers: out = d(in)/d(axis). `in` and `out`
/// must not alias.
void derivative_into(const Grid& g, const double* in, double* out, int axis,
                     BoundaryRule rule);

VectorField grad(const ScalarField& s, const StencilSpec& spec = {});
ScalarField div(const VectorField& u, const StencilSpec& spec = {});
VectorField curl(const VectorField& u, const StencilSpec& spec = {});

/// div with one closure rule per component (component a is differentiated
/// along axis a only).
ScalarField div(const VectorField& u, const std::array<BoundaryRule, 3>& rules);

/// curl with a full per-component/per-axis rule table.
VectorField curl(const VectorField& u, const VectorRules& rules);

/// Per-cell 3x3 matrix-vector product M(x) u(x). Throws on grid mismatch.
VectorField apply_tensor(const TensorField& M, const VectorField& u);

/// Tangential components of u extrapolated to one cube face.
/// `component[2]` are the axes tangential to the face, in increasing order;
/// values are stored as n*n pairs indexed by the two tangential coordinates.
struct FaceTrace {
    Face face;
    std::array<int, 2> component;
    std::vector<std::array<double, 2>> values;  // n*n entries

    double max_abs() const;
};

/// Second-order one-sided extrapolation of the two tangential components
/// of u onto each of the six faces.
std::array<FaceTrace, 6> tangential_trace(const VectorField& u);

double max_tangential_trace(const VectorField& u);

/// Composite Dirichlet Laplacian: div_even(grad_odd(s)). This is the exact
/// negative transpose pairing used by the scalar solvers.
ScalarField scalar_laplacian(const ScalarField& s);

}  // namespace dcv
