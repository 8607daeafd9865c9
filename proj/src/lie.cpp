#include "entangle/lie.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace entangle {

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exp: input must be square");
  if (!m.allFinite()) throw std::domain_error("matrix_exp: non-finite input");
  return m.exp();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("commutator: shape mismatch");
  return a * b - b * a;
}

ComplexMatrix big_adjoint(const ComplexMatrix& u, const ComplexMatrix& m, double tol) {
  if (u.rows() != u.cols() || u.rows() != m.rows() || m.rows() != m.cols())
    throw std::invalid_argument("big_adjoint: shape mismatch");
  const double dev =
      (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw std::invalid_argument("big_adjoint: U not unitary within tolerance (deviation " +
                                std::to_string(dev) + ")");
  return u * m * u.adjoint();
}

Eigen::Matrix3d so3_generator(int j) {
  Eigen::Matrix3d l = Eigen::Matrix3d::Zero();
  switch (j) {
    case 1: l(1, 2) = -1; l(2, 1) = 1; break;
    case 2: l(0, 2) = 1; l(2, 0) = -1; break;
    case 3: l(0, 1) = -1; l(1, 0) = 1; break;
    default: throw std::invalid_argument("so3_generator: axis must be 1, 2 or 3");
  }
  return l;
}

Eigen::Matrix4d little_adjoint_matrix(int j) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  if (j == 0) return m;
  if (j < 0 || j > 3) throw std::invalid_argument("little_adjoint_matrix: axis out of range");
  m.bottomRightCorner<3, 3>() = so3_generator(j);
  return m;
}

LocalAlgebraElement::LocalAlgebraElement(std::vector<Eigen::Vector3d> a_)
    : n(static_cast<int>(a_.size())), a(std::move(a_)) {
  if (n < 1) throw std::invalid_argument("LocalAlgebraElement: need at least one qubit");
}

LocalAlgebraElement LocalAlgebraElement::zero(int n) {
  return LocalAlgebraElement(std::vector<Eigen::Vector3d>(n, Eigen::Vector3d::Zero()));
}

RealVector LocalAlgebraElement::flat() const {
  RealVector theta(3 * n);
  for (int k = 0; k < n; ++k) theta.segment<3>(3 * k) = a[k];
  return theta;
}

LocalAlgebraElement LocalAlgebraElement::from_flat(const RealVector& theta) {
  if (theta.size() % 3 != 0 || theta.size() == 0)
    throw std::invalid_argument("LocalAlgebraElement: flat length must be 3n");
  std::vector<Eigen::Vector3d> a(theta.size() / 3);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = theta.segment<3>(3 * k);
  return LocalAlgebraElement(std::move(a));
}

ComplexMatrix embed(const LocalAlgebraElement& v) {
  const std::int64_t dim = matrix_dim(v.n);
  ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < v.n; ++k) {
    for (int j = 0; j < 3; ++j) {
      if (v.a[k](j) == 0.0) continue;
      std::vector<int> digits(v.n, 0);
      digits[k] = j + 1;
      acc += v.a[k](j) * pauli_tensor(PauliIndex(std::move(digits)));
    }
  }
  return acc;
}

Eigen::Matrix2cd su2_exp(const Eigen::Vector3d& a) {
  const double theta = a.norm();
  Eigen::Matrix2cd u = std::cos(theta / 2.0) * Eigen::Matrix2cd::Identity();
  if (theta > 0.0) {
    const double s = std::sin(theta / 2.0) / theta;
    const Eigen::Vector3d b = s * a;
    const Complex i(0.0, 1.0);
    for (int j = 0; j < 3; ++j) u -= i * b(j) * pauli_matrix(j + 1);
  }
  return u;
}

Eigen::Vector3d su2_log(const Eigen::Matrix2cd& u) {
  // U = alpha I - i (beta . sigma) with alpha^2 + |beta|^2 = 1.
  const double alpha = 0.5 * (u(0, 0) + u(1, 1)).real();
  Eigen::Vector3d beta;
  beta(0) = -0.5 * (u(0, 1) + u(1, 0)).imag();
  beta(1) = 0.5 * (u(1, 0) - u(0, 1)).real();
  beta(2) = -0.5 * (u(0, 0) - u(1, 1)).imag();
  const double norm = beta.norm();
  if (norm < 1e-15) {
    // alpha near -1 means U = -I = exp(2*pi xi_3); near +1 means identity.
    if (alpha < 0.0) return Eigen::Vector3d(0.0, 0.0, 2.0 * M_PI);
    return Eigen::Vector3d::Zero();
  }
  const double theta = 2.0 * std::atan2(norm, alpha);
  return (theta / norm) * beta;
}

ComplexMatrix local_exp(const LocalAlgebraElement& v) {
  ComplexMatrix u = su2_exp(v.a[0]);
  for (int k = 1; k < v.n; ++k)
    u = Eigen::kroneckerProduct(u, su2_exp(v.a[k])).eval();
  return u;
}

Eigen::MatrixXd adjoint_matrix(const LocalAlgebraElement& v) {
  const std::int64_t count = coefficient_count(v.n);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(count, count);
  for (int k = 0; k < v.n; ++k) {
    Eigen::Matrix4d block = Eigen::Matrix4d::Zero();
    for (int j = 0; j < 3; ++j) block += v.a[k](j) * little_adjoint_matrix(j + 1);
    Eigen::MatrixXd factor = block;
    if (k > 0)
      factor = Eigen::kroneckerProduct(
                   Eigen::MatrixXd::Identity(std::int64_t{1} << (2 * k),
                                             std::int64_t{1} << (2 * k)),
                   factor)
                   .eval();
    const int rest = v.n - 1 - k;
    if (rest > 0)
      factor = Eigen::kroneckerProduct(
                   factor, Eigen::MatrixXd::Identity(std::int64_t{1} << (2 * rest),
                                                     std::int64_t{1} << (2 * rest)))
                   .eval();
    acc += factor;
  }
  return acc;
}

}  // namespace entangle
