#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "entangle/lie.hpp"
#include "entangle/pauli.hpp"

/// Infinitesimal action of l(2^n) on u(2^n) in coefficient coordinates, and
/// entanglement-class dimensions as numerical ranks of tangent frames.
namespace entangle {

/// Tangent vector at a point of u(2^n), components over d/dx_a.
/// The (0,...,0) component is always zero: the action never moves the trace
/// coordinate.
struct TangentVector {
  int n = 0;
  RealVector t;
};

/// Omega(v)|_x via the coordinate cross-product formula: for each slot k and
/// each assignment of the other digits, the slot-k (1,2,3) block of t picks up
/// a^{(k)} x (matching block of x). Production path, O(n 4^n).
TangentVector omega_at(const LocalAlgebraElement& v, const CoefficientVector& x);

/// Omega(v)|_x via the commutator route: decompose([embed(v), i*rho]).
/// Independent oracle for omega_at.
TangentVector omega_at_bracket(const LocalAlgebraElement& v, const CoefficientVector& x);

/// 4^n x 4^n matrix M of the linear vector field Omega(xi_{slot,axis}):
/// omega_at equals M * x. Sparse (one entry per row). slot is 1-based.
Eigen::SparseMatrix<double> omega_linear_matrix(int n, int slot, int axis);

/// Rows of Omega over the l(2^n) basis at a fixed point, slot-major order:
/// (slot 1 axes 1,2,3), (slot 2 axes 1,2,3), ...
struct TangentFrame {
  int n = 0;
  Eigen::MatrixXd rows;  // 3n x 4^n
};

TangentFrame tangent_frame(const CoefficientVector& x);

/// Numerical rank of the tangent frame: singular values > tol * sigma_max,
/// with rank 0 when the whole frame sits below an absolute floor.
int orbit_dimension(const CoefficientVector& x, double tol = 1e-8);

}  // namespace entangle
