#pragma once

#include <Eigen/Dense>
#include <vector>

#include "entangle/pauli.hpp"

/// Matrix Lie-group primitives: exponential, commutator, the big adjoint
/// Ad_U(m) = U m U^dag, the little adjoint ad_v(u) = [v, u], and the so(3)
/// generators L_1, L_2, L_3.
///
/// Sign convention: ad_v(u) = [v, u] throughout, so that
/// d/dt Ad_{exp(tv)}|_{t=0} = ad_v holds literally and the representation of
/// ad_{xi_j} on the {xi_0..xi_3} basis is exactly 0 (+) L_j.
namespace entangle {

/// Scaling-and-squaring matrix exponential (Pade, via Eigen). Throws on
/// non-finite input.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// [A, B] = AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ad_U(m) = U m U^dag. Throws if U is not unitary within tol.
ComplexMatrix big_adjoint(const ComplexMatrix& u, const ComplexMatrix& m,
                          double tol = 1e-9);

/// L_j for j in {1,2,3}: the so(3) basis with [L_1, L_2] = L_3 and cyclic.
Eigen::Matrix3d so3_generator(int j);

/// Representation of ad_{xi_j} on the {xi_0..xi_3} basis: 0 (+) L_j for
/// j = 1,2,3 and the zero matrix for j = 0.
Eigen::Matrix4d little_adjoint_matrix(int j);

/// Element v of l(2^n) = su(2) [+] ... [+] su(2), one real 3-vector per qubit:
/// v = sum_k sum_j a^{(k)}_j xi_{0..0 j 0..0} (j in slot k).
struct LocalAlgebraElement {
  int n = 0;
  std::vector<Eigen::Vector3d> a;

  LocalAlgebraElement() = default;
  explicit LocalAlgebraElement(std::vector<Eigen::Vector3d> a_);
  static LocalAlgebraElement zero(int n);

  /// Parameters flattened slot-major: (a^{(1)}_1..3, a^{(2)}_1..3, ...).
  RealVector flat() const;
  static LocalAlgebraElement from_flat(const RealVector& theta);
};

/// Embeds v into u(2^n) as a traceless skew-Hermitian 2^n x 2^n matrix.
ComplexMatrix embed(const LocalAlgebraElement& v);

/// exp(a . xi) in SU(2), closed form: cos(|a|/2) I - i sin(|a|/2) (a_hat . sigma).
Eigen::Matrix2cd su2_exp(const Eigen::Vector3d& a);

/// Inverse of su2_exp on the principal branch, |result| <= 2*pi.
Eigen::Vector3d su2_log(const Eigen::Matrix2cd& u);

/// (x)_k exp(a^{(k)} . xi): the local unitary exp(embed(v)).
ComplexMatrix local_exp(const LocalAlgebraElement& v);

/// 4^n x 4^n matrix of ad_v on the xi-basis: sum over slots of
/// I (x) ... (x) (0 (+) a^{(k)}.L) (x) ... (x) I.
Eigen::MatrixXd adjoint_matrix(const LocalAlgebraElement& v);

}  // namespace entangle
