#include "entangle/tangent.hpp"

#include <stdexcept>

namespace entangle {

namespace {

constexpr double kAbsoluteFloor = 1e-12;

// Visits every base-4 index whose slot-k digit is zero (k zero-based).
// stride = 4^(n-1-k) separates the slot-k digit values within a group.
template <typename F>
void for_each_group(int n, int k, F&& visit) {
  const std::int64_t stride = std::int64_t{1} << (2 * (n - 1 - k));
  const std::int64_t hi_count = std::int64_t{1} << (2 * k);
  for (std::int64_t hi = 0; hi < hi_count; ++hi) {
    const std::int64_t hi_base = hi * 4 * stride;
    for (std::int64_t lo = 0; lo < stride; ++lo) visit(hi_base + lo, stride);
  }
}

}  // namespace

TangentVector omega_at(const LocalAlgebraElement& v, const CoefficientVector& x) {
  if (v.n != x.n) throw std::invalid_argument("omega_at: qubit count mismatch");
  RealVector t = RealVector::Zero(x.x.size());
  for (int k = 0; k < v.n; ++k) {
    const Eigen::Vector3d& a = v.a[k];
    if (a.isZero(0.0)) continue;
    for_each_group(v.n, k, [&](std::int64_t base, std::int64_t s) {
      const Eigen::Vector3d block(x.x(base + s), x.x(base + 2 * s), x.x(base + 3 * s));
      const Eigen::Vector3d c = a.cross(block);
      t(base + s) += c(0);
      t(base + 2 * s) += c(1);
      t(base + 3 * s) += c(2);
    });
  }
  return TangentVector{x.n, std::move(t)};
}

TangentVector omega_at_bracket(const LocalAlgebraElement& v, const CoefficientVector& x) {
  if (v.n != x.n) throw std::invalid_argument("omega_at_bracket: qubit count mismatch");
  const ComplexMatrix bracket = commutator(embed(v), i_rho(x));
  // [v, i rho] is again skew-Hermitian; decompose expects the rho form.
  const DensityMatrix as_rho(x.n, Complex(0.0, -1.0) * bracket);
  return TangentVector{x.n, decompose(as_rho).x};
}

Eigen::SparseMatrix<double> omega_linear_matrix(int n, int slot, int axis) {
  if (slot < 1 || slot > n) throw std::invalid_argument("omega_linear_matrix: slot out of range");
  if (axis < 1 || axis > 3) throw std::invalid_argument("omega_linear_matrix: axis out of range");
  const std::int64_t count = coefficient_count(n);
  const Eigen::Matrix3d l = so3_generator(axis);
  std::vector<Eigen::Triplet<double>> triplets;
  for_each_group(n, slot - 1, [&](std::int64_t base, std::int64_t s) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (l(r, c) != 0.0)
          triplets.emplace_back(base + (r + 1) * s, base + (c + 1) * s, l(r, c));
  });
  Eigen::SparseMatrix<double> m(count, count);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

TangentFrame tangent_frame(const CoefficientVector& x) {
  const std::int64_t count = coefficient_count(x.n);
  Eigen::MatrixXd rows(3 * x.n, count);
  for (int k = 0; k < x.n; ++k) {
    for (int j = 0; j < 3; ++j) {
      LocalAlgebraElement v = LocalAlgebraElement::zero(x.n);
      v.a[k](j) = 1.0;
      rows.row(3 * k + j) = omega_at(v, x).t.transpose();
    }
  }
  return TangentFrame{x.n, std::move(rows)};
}

int orbit_dimension(const CoefficientVector& x, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("orbit_dimension: tol must be positive");
  const TangentFrame frame = tangent_frame(x);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(frame.rows);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) <= kAbsoluteFloor) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > tol * sigma(0)) ++rank;
  return rank;
}

}  // namespace entangle
