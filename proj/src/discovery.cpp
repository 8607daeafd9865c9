#include "entangle/discovery.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "entangle/lie.hpp"
#include "entangle/tangent.hpp"

namespace entangle {

namespace {

void enumerate(int vars, int remaining, std::vector<int>& current,
               std::vector<std::vector<int>>& out) {
  if (vars == 1) {
    current.push_back(remaining);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.push_back(e);
    enumerate(vars - 1, remaining - e, current, out);
    current.pop_back();
  }
}

}  // namespace

std::int64_t MonomialBasis::count(int n, int degree) {
  // C(4^n + d - 1, d)
  const std::int64_t vars = coefficient_count(n);
  std::int64_t c = 1;
  for (int i = 1; i <= degree; ++i) c = c * (vars - 1 + i) / i;
  return c;
}

MonomialBasis MonomialBasis::build(int n, int degree) {
  if (n < 1 || degree < 1) throw std::invalid_argument("MonomialBasis: n, degree must be >= 1");
  MonomialBasis basis;
  basis.n = n;
  basis.degree = degree;
  std::vector<int> current;
  enumerate(static_cast<int>(coefficient_count(n)), degree, current, basis.exponents);
  basis.lookup_.reserve(basis.exponents.size());
  for (std::int64_t i = 0; i < basis.size(); ++i)
    basis.lookup_.emplace_back(basis.exponents[i], i);
  std::sort(basis.lookup_.begin(), basis.lookup_.end());
  return basis;
}

std::int64_t MonomialBasis::index_of(const std::vector<int>& exps) const {
  const auto it = std::lower_bound(
      lookup_.begin(), lookup_.end(), exps,
      [](const auto& entry, const std::vector<int>& key) { return entry.first < key; });
  if (it == lookup_.end() || it->first != exps)
    throw std::invalid_argument("MonomialBasis: monomial not in basis");
  return it->second;
}

SizeBudgetError::SizeBudgetError(std::int64_t refused, std::int64_t budget)
    : std::runtime_error("invariant_kernel: monomial space of dimension " +
                         std::to_string(refused) + " exceeds the size budget " +
                         std::to_string(budget)),
      refused_(refused) {}

Eigen::SparseMatrix<double> omega_operator(int slot, int axis, const MonomialBasis& basis) {
  const Eigen::SparseMatrix<double> field = omega_linear_matrix(basis.n, slot, axis);
  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<int> scratch;
  // Row-major copy so rows of the field matrix are directly iterable.
  const Eigen::SparseMatrix<double, Eigen::RowMajor> field_rows(field);
  for (std::int64_t col = 0; col < basis.size(); ++col) {
    const std::vector<int>& alpha = basis.exponents[col];
    for (std::size_t a = 0; a < alpha.size(); ++a) {
      if (alpha[a] == 0) continue;
      // product rule: d/dx_a contributes alpha_a * x^(alpha - e_a), then the
      // field coefficient (M x)_a re-multiplies by each x_b with weight M_ab.
      for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(
               field_rows, static_cast<std::int64_t>(a));
           it; ++it) {
        const std::int64_t b = it.col();
        scratch = alpha;
        scratch[a] -= 1;
        scratch[b] += 1;
        triplets.emplace_back(basis.index_of(scratch), col, it.value() * alpha[a]);
      }
    }
  }
  Eigen::SparseMatrix<double> op(basis.size(), basis.size());
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

std::vector<PolynomialInvariant> invariant_kernel(int n, int degree, double tol,
                                                  std::int64_t budget) {
  const std::int64_t dim = MonomialBasis::count(n, degree);
  if (dim > budget) throw SizeBudgetError(dim, budget);
  auto basis = std::make_shared<const MonomialBasis>(MonomialBasis::build(n, degree));

  // Joint kernel via the Gram matrix of the stacked operators; assembly is
  // exact so the spectrum splits cleanly.
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
  for (int slot = 1; slot <= n; ++slot) {
    for (int axis = 1; axis <= 3; ++axis) {
      const Eigen::SparseMatrix<double> op = omega_operator(slot, axis, *basis);
      gram += Eigen::MatrixXd(op.transpose() * op);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const Eigen::VectorXd lambda = es.eigenvalues();  // ascending
  const double lambda_max = std::max(lambda(dim - 1), 1.0);
  const double sigma_floor =
      std::sqrt(static_cast<double>(dim) * std::numeric_limits<double>::epsilon() *
                lambda_max) *
      4.0;
  const double sigma_tol = std::max(tol, sigma_floor);

  std::int64_t kernel_dim = 0;
  while (kernel_dim < dim &&
         std::sqrt(std::max(lambda(kernel_dim), 0.0)) <= sigma_tol)
    ++kernel_dim;
  Eigen::MatrixXd kernel = es.eigenvectors().leftCols(kernel_dim).transpose();  // k x dim

  // Sparsifying pivot pass (Gauss-Jordan over the graded-lex column order) so
  // recognizable generators surface when they span an axis direction.
  std::vector<bool> used(kernel_dim, false);
  for (std::int64_t col = 0; col < dim; ++col) {
    std::int64_t pivot = -1;
    double best = 1e-8;
    for (std::int64_t r = 0; r < kernel_dim; ++r) {
      if (used[r]) continue;
      if (std::abs(kernel(r, col)) > best) {
        best = std::abs(kernel(r, col));
        pivot = r;
      }
    }
    if (pivot < 0) continue;
    used[pivot] = true;
    kernel.row(pivot) /= kernel(pivot, col);
    for (std::int64_t r = 0; r < kernel_dim; ++r)
      if (r != pivot && kernel(r, col) != 0.0)
        kernel.row(r) -= kernel(r, col) * kernel.row(pivot);
  }

  std::vector<PolynomialInvariant> out;
  out.reserve(kernel_dim);
  for (std::int64_t r = 0; r < kernel_dim; ++r) {
    Eigen::VectorXd coeffs = kernel.row(r).transpose();
    // drop elimination residue, normalize, fix sign on the leading monomial
    for (std::int64_t i = 0; i < dim; ++i)
      if (std::abs(coeffs(i)) < 1e-12) coeffs(i) = 0.0;
    coeffs.normalize();
    for (std::int64_t i = 0; i < dim; ++i) {
      if (coeffs(i) != 0.0) {
        if (coeffs(i) < 0.0) coeffs = -coeffs;
        break;
      }
    }
    out.push_back(PolynomialInvariant{basis, std::move(coeffs)});
  }
  return out;
}

double evaluate(const PolynomialInvariant& p, const CoefficientVector& x) {
  if (x.n != p.n()) throw std::invalid_argument("evaluate: qubit count mismatch");
  double acc = 0.0;
  for (std::int64_t i = 0; i < p.basis->size(); ++i) {
    if (p.coeffs(i) == 0.0) continue;
    double term = p.coeffs(i);
    const std::vector<int>& exps = p.basis->exponents[i];
    for (std::size_t a = 0; a < exps.size(); ++a)
      for (int e = 0; e < exps[a]; ++e) term *= x.x(a);
    acc += term;
  }
  return acc;
}

VerifyReport verify_invariant(const PolynomialInvariant& p, int trials, double tol,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  VerifyReport report;
  report.trials = trials;
  report.tol = tol;
  const int n = p.n();
  for (int t = 0; t < trials; ++t) {
    RealVector x(coefficient_count(n));
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = unit(rng);
    const CoefficientVector cv(n, x);
    LocalAlgebraElement v = LocalAlgebraElement::zero(n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < 3; ++j) v.a[k](j) = angle(rng);
    const ComplexMatrix u = local_exp(v);
    const DensityMatrix moved(n, big_adjoint(u, reconstruct(cv).rho));
    const double before = evaluate(p, cv);
    const double after = evaluate(p, decompose(moved));
    const double dev = std::abs(after - before) / std::max(1.0, std::abs(before));
    report.max_relative_deviation = std::max(report.max_relative_deviation, dev);
  }
  report.pass = report.max_relative_deviation < tol;
  return report;
}

nlohmann::json invariant_to_json(const PolynomialInvariant& p) {
  nlohmann::json monomials = nlohmann::json::array();
  for (std::int64_t i = 0; i < p.basis->size(); ++i) {
    if (p.coeffs(i) == 0.0) continue;
    monomials.push_back({{"exponents", p.basis->exponents[i]}, {"coeff", p.coeffs(i)}});
  }
  return {{"n", p.n()}, {"degree", p.degree()}, {"monomials", monomials}};
}

PolynomialInvariant invariant_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const int degree = j.at("degree").get<int>();
  auto basis = std::make_shared<const MonomialBasis>(MonomialBasis::build(n, degree));
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(basis->size());
  for (const auto& m : j.at("monomials")) {
    const auto exps = m.at("exponents").get<std::vector<int>>();
    coeffs(basis->index_of(exps)) = m.at("coeff").get<double>();
  }
  return PolynomialInvariant{std::move(basis), std::move(coeffs)};
}

}  // namespace entangle
