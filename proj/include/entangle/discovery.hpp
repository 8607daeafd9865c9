#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "entangle/pauli.hpp"

#include "json.hpp"

/// Polynomial invariant discovery: every local-unitary polynomial invariant of
/// homogeneous degree d is a joint null vector of the 3n first-order operators
/// Omega(xi_{k,j}) restricted to the degree-d monomial space. The operators
/// preserve degree (their coefficients are linear in x), so each degree is an
/// independent stratum.
namespace entangle {

/// All monomials over the 4^n variables x_a, homogeneous of total degree d,
/// in graded-lexicographic order over the frozen base-4 variable order.
struct MonomialBasis {
  int n = 0;
  int degree = 0;
  std::vector<std::vector<int>> exponents;  // each of length 4^n, summing to degree

  static std::int64_t count(int n, int degree);
  static MonomialBasis build(int n, int degree);

  std::int64_t index_of(const std::vector<int>& exps) const;
  std::int64_t size() const { return static_cast<std::int64_t>(exponents.size()); }

 private:
  std::vector<std::pair<std::vector<int>, std::int64_t>> lookup_;  // sorted
};

struct PolynomialInvariant {
  std::shared_ptr<const MonomialBasis> basis;
  Eigen::VectorXd coeffs;  // unit norm, over basis->exponents

  int n() const { return basis->n; }
  int degree() const { return basis->degree; }
};

class SizeBudgetError : public std::runtime_error {
 public:
  SizeBudgetError(std::int64_t refused, std::int64_t budget);
  std::int64_t refused_dimension() const { return refused_; }

 private:
  std::int64_t refused_;
};

/// Matrix of the derivation f -> Omega(xi_{slot,axis}) f on the degree-d
/// monomial space (slot 1-based, axis in 1..3). Entries are exact integers.
Eigen::SparseMatrix<double> omega_operator(int slot, int axis, const MonomialBasis& basis);

/// Orthonormal basis of the joint kernel of all 3n operators at degree d,
/// sparsified by a pivoting pass so axis-aligned generators surface.
/// tol is the singular-value threshold of the stacked operator.
std::vector<PolynomialInvariant> invariant_kernel(int n, int degree, double tol = 1e-10,
                                                  std::int64_t budget = 20000);

double evaluate(const PolynomialInvariant& p, const CoefficientVector& x);

struct VerifyReport {
  int trials = 0;
  double tol = 0.0;
  double max_relative_deviation = 0.0;
  bool pass = false;
};

/// Evaluates p at random x and at the coefficients of Ad_U(rho) for random
/// local U, and reports the worst relative drift.
VerifyReport verify_invariant(const PolynomialInvariant& p, int trials, double tol,
                              std::uint64_t seed = 0);

nlohmann::json invariant_to_json(const PolynomialInvariant& p);
PolynomialInvariant invariant_from_json(const nlohmann::json& j);

}  // namespace entangle
