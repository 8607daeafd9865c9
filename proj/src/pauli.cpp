#include "entangle/pauli.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

namespace entangle {

namespace {

void check_digits(const std::vector<int>& digits) {
  if (digits.empty()) throw std::invalid_argument("PauliIndex: need at least one digit");
  for (int d : digits) {
    if (d < 0 || d > 3)
      throw std::invalid_argument("PauliIndex: digit " + std::to_string(d) +
                                  " outside {0,1,2,3}");
  }
}

}  // namespace

PauliIndex::PauliIndex(std::vector<int> d) : digits(std::move(d)) { check_digits(digits); }

PauliIndex PauliIndex::from_linear(int n, std::int64_t a) {
  if (n < 1) throw std::invalid_argument("PauliIndex: n must be >= 1");
  if (a < 0 || a >= coefficient_count(n))
    throw std::invalid_argument("PauliIndex: linear index out of range");
  std::vector<int> digits(n);
  for (int j = n - 1; j >= 0; --j) {
    digits[j] = static_cast<int>(a & 3);
    a >>= 2;
  }
  return PauliIndex(std::move(digits));
}

std::int64_t PauliIndex::linear() const {
  std::int64_t a = 0;
  for (int d : digits) a = (a << 2) | d;
  return a;
}

Eigen::Matrix2cd pauli_matrix(int k) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default:
      throw std::invalid_argument("pauli_matrix: index " + std::to_string(k) +
                                  " outside {0,1,2,3}");
  }
  return m;
}

ComplexMatrix pauli_tensor(const PauliIndex& index) {
  ComplexMatrix m = pauli_matrix(index.digits[0]);
  for (std::size_t j = 1; j < index.digits.size(); ++j)
    m = Eigen::kroneckerProduct(m, pauli_matrix(index.digits[j])).eval();
  return Complex(0.0, -0.5) * m;
}

ComplexMatrix kronecker_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("kronecker_sum: inputs must be square");
  const ComplexMatrix ia = ComplexMatrix::Identity(a.rows(), a.cols());
  const ComplexMatrix ib = ComplexMatrix::Identity(b.rows(), b.cols());
  return Eigen::kroneckerProduct(a, ib) + Eigen::kroneckerProduct(ia, b);
}

DensityMatrix::DensityMatrix(int n_, ComplexMatrix rho_) : n(n_), rho(std::move(rho_)) {
  if (n < 1) throw std::invalid_argument("DensityMatrix: n must be >= 1");
  if (rho.rows() != matrix_dim(n) || rho.cols() != matrix_dim(n))
    throw std::invalid_argument("DensityMatrix: matrix must be 2^n x 2^n");
}

CoefficientVector::CoefficientVector(int n_, RealVector x_) : n(n_), x(std::move(x_)) {
  if (n < 1) throw std::invalid_argument("CoefficientVector: n must be >= 1");
  if (x.size() != coefficient_count(n))
    throw std::invalid_argument("CoefficientVector: length must be 4^n");
}

int qubits_from_dim(std::int64_t dim) {
  int n = 0;
  std::int64_t d = dim;
  while (d > 1 && (d & 1) == 0) {
    d >>= 1;
    ++n;
  }
  if (d != 1 || n < 1)
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " is not 2^n with n >= 1");
  return n;
}

CoefficientVector decompose(const DensityMatrix& m, double tol) {
  const double herm = (m.rho - m.rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol)
    throw std::invalid_argument("decompose: input not Hermitian within tolerance (residual " +
                                std::to_string(herm) + ")");
  // Tr((i rho) xi_a^dag) / 2^{n-2} collapses to -Tr(rho sigma_a) / 2^{n-1}.
  const std::int64_t count = coefficient_count(m.n);
  const double scale = -1.0 / static_cast<double>(std::int64_t{1} << (m.n - 1));
  RealVector x(count);
  for (std::int64_t a = 0; a < count; ++a) {
    const ComplexMatrix sigma =
        Complex(0.0, 2.0) * pauli_tensor(PauliIndex::from_linear(m.n, a));
    const Complex tr = (m.rho * sigma).trace();
    if (std::abs(tr.imag()) > tol)
      throw std::invalid_argument("decompose: imaginary residue above tolerance");
    x(a) = scale * tr.real();
  }
  return CoefficientVector(m.n, std::move(x));
}

DensityMatrix reconstruct(const CoefficientVector& x) {
  const std::int64_t dim = matrix_dim(x.n);
  ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
  for (std::int64_t a = 0; a < coefficient_count(x.n); ++a) {
    if (x.x(a) == 0.0) continue;
    acc += x.x(a) * pauli_tensor(PauliIndex::from_linear(x.n, a));
  }
  return DensityMatrix(x.n, Complex(0.0, -1.0) * acc);
}

ComplexMatrix i_rho(const CoefficientVector& x) {
  return Complex(0.0, 1.0) * reconstruct(x).rho;
}

DensityReport validate_density(const ComplexMatrix& m, double tol) {
  DensityReport report;
  if (m.rows() != m.cols() || m.rows() == 0) return report;
  report.hermitian = (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
  report.unit_trace = std::abs(m.trace() - Complex(1.0, 0.0)) <= tol;
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = es.eigenvalues().minCoeff();
  report.psd = report.min_eigenvalue >= -tol;
  return report;
}

}  // namespace entangle
