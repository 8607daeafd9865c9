#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

/// Pauli coefficient algebra for u(2^n).
///
/// States are carried in two interchangeable forms: the 2^n x 2^n density
/// matrix rho, and the real coefficient vector x over the basis
///   xi_{k1...kn} = -(i/2) sigma_{k1} (x) ... (x) sigma_{kn},
/// which is trace-orthogonal: Tr(xi_a xi_b^dag) = 2^{n-2} delta_ab.
namespace entangle {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Multi-index (k_1 ... k_n), each digit in {0,1,2,3}, k_1 most significant.
/// Linearized base-4 big-endian.
struct PauliIndex {
  std::vector<int> digits;

  explicit PauliIndex(std::vector<int> d);
  static PauliIndex from_linear(int n, std::int64_t a);

  int qubits() const { return static_cast<int>(digits.size()); }
  std::int64_t linear() const;
};

/// sigma_0 .. sigma_3 (identity and the three Pauli matrices).
Eigen::Matrix2cd pauli_matrix(int k);

/// xi_{k1...kn} = -(i/2) sigma_{k1} (x) ... (x) sigma_{kn}. Skew-Hermitian.
ComplexMatrix pauli_tensor(const PauliIndex& index);

/// A (x) I + I (x) B.
ComplexMatrix kronecker_sum(const ComplexMatrix& a, const ComplexMatrix& b);

struct DensityMatrix {
  int n = 0;
  ComplexMatrix rho;

  DensityMatrix() = default;
  DensityMatrix(int n_, ComplexMatrix rho_);
};

/// Real coefficients x_a of i*rho over the xi-basis, base-4 index order.
struct CoefficientVector {
  int n = 0;
  RealVector x;

  CoefficientVector() = default;
  CoefficientVector(int n_, RealVector x_);
};

/// x_a = Tr((i rho) xi_a^dag) / 2^{n-2}. Throws if rho is not Hermitian
/// within tol (or leaves an imaginary residue above tol).
CoefficientVector decompose(const DensityMatrix& m, double tol = 1e-9);

/// rho = -i sum_a x_a xi_a. Hermitian by construction.
DensityMatrix reconstruct(const CoefficientVector& x);

/// i*rho as a matrix, convenience for adjoint-action formulas.
ComplexMatrix i_rho(const CoefficientVector& x);

struct DensityReport {
  bool hermitian = false;
  bool unit_trace = false;
  bool psd = false;
  double min_eigenvalue = 0.0;

  bool physical() const { return hermitian && unit_trace && psd; }
};

/// Report-style check: never throws on unphysical input.
DensityReport validate_density(const ComplexMatrix& m, double tol = 1e-9);

inline std::int64_t coefficient_count(int n) { return std::int64_t{1} << (2 * n); }
inline std::int64_t matrix_dim(int n) { return std::int64_t{1} << n; }

/// Qubit count from a 2^n x 2^n matrix dimension; throws if not a power of two.
int qubits_from_dim(std::int64_t dim);

}  // namespace entangle
