#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "entangle/pauli.hpp"

/// Closed-form local-unitary invariants: the one-qubit Bloch radius and the
/// two-qubit nine-invariant basic set plus the sign-resolving tenth.
///
/// For n >= 3 no complete closed-form set is available here; only the trace
/// coordinate and the spectral moments Tr(rho^k) are exposed, as a
/// necessary-condition set (see spectral_invariants).
namespace entangle {

/// Block views of a two-qubit coefficient vector and Z = x**^T x**.
struct TwoQubitBlocks {
  double x00 = 0.0;
  Eigen::Vector3d x0s;   // (x_01, x_02, x_03)
  Eigen::Vector3d xs0;   // (x_10, x_20, x_30)
  Eigen::Matrix3d xss;   // (x_jk), j,k = 1..3
  Eigen::Matrix3d z;     // xss^T * xss, symmetric PSD, second-slot indices
};

struct InvariantRecord {
  int n = 0;
  std::vector<std::pair<std::string, double>> values;
};

/// |x| = sqrt(x1^2 + x2^2 + x3^2); in [0,1] for physical states.
double one_qubit_invariant(const CoefficientVector& x);

TwoQubitBlocks two_qubit_blocks(const CoefficientVector& x);

/// The ten two-qubit invariants in fixed row-major table order:
///   Tr(Z), Tr(Z^2), det(x**),
///   x0* x0*^T, x0* Z x0*^T, x0* Z^2 x0*^T,
///   x0* x** x*0^T, x0* Z x** x*0^T, x0* Z^2 x** x*0^T,
///   x0* . (Z x0*^T) x (Z^2 x0*^T)
InvariantRecord two_qubit_invariants(const CoefficientVector& x);

/// n=1: {radius}; n=2: the ten invariants above. Throws for other n.
InvariantRecord invariant_record(const CoefficientVector& x);

/// Necessary-condition set for any n: x_{0...0} and Tr(rho^k), k = 2..2^n.
/// Not a complete set for n >= 3.
InvariantRecord spectral_invariants(const CoefficientVector& x);

struct InvariantComparison {
  bool equal = false;
  std::string separating;  // name of the first separating invariant when unequal
};

/// Componentwise comparison under the mixed rule |da| <= tol*max(1,|a|,|b|).
/// Throws for n outside {1,2}: no complete set, use orbit search instead.
InvariantComparison invariants_equal(const InvariantRecord& a, const InvariantRecord& b,
                                     double tol = 1e-9);

}  // namespace entangle
