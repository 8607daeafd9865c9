#include "entangle/orbit.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace entangle {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix kron_factors(const std::vector<Eigen::Matrix2cd>& factors) {
  ComplexMatrix u = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k)
    u = Eigen::kroneckerProduct(u, factors[k]).eval();
  return u;
}

double frob_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace().real();
}

// Objective over the local group: || U m U^dag - target ||_F^2.
class OrbitObjective {
 public:
  OrbitObjective(const ComplexMatrix& m, const ComplexMatrix& target, int n)
      : m_(m), target_(target), n_(n) {
    basis_.reserve(3 * n);
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < 3; ++j) {
        LocalAlgebraElement v = LocalAlgebraElement::zero(n);
        v.a[k](j) = 1.0;
        basis_.push_back(embed(v));
      }
    }
  }

  double value(const std::vector<Eigen::Matrix2cd>& factors) const {
    const ComplexMatrix u = kron_factors(factors);
    return (u * m_ * u.adjoint() - target_).squaredNorm();
  }

  double value_at(const RealVector& theta) const {
    const ComplexMatrix u = local_exp(LocalAlgebraElement::from_flat(theta));
    return (u * m_ * u.adjoint() - target_).squaredNorm();
  }

  // Left-invariant gradient: d/dt || Ad_{exp(t v) U} m - target ||^2 at t = 0
  // equals 2 <[v, Ad_U m], Ad_U m - target>.
  RealVector gradient(const std::vector<Eigen::Matrix2cd>& factors) const {
    const ComplexMatrix u = kron_factors(factors);
    const ComplexMatrix moved = u * m_ * u.adjoint();
    const ComplexMatrix residual = moved - target_;
    RealVector g(3 * n_);
    for (int i = 0; i < 3 * n_; ++i)
      g(i) = 2.0 * frob_inner(commutator(basis_[i], moved), residual);
    return g;
  }

  int n() const { return n_; }

 private:
  ComplexMatrix m_;
  ComplexMatrix target_;
  int n_;
  std::vector<ComplexMatrix> basis_;
};

// Riemannian descent with backtracking; updates each SU(2) factor on the left.
double descend(const OrbitObjective& objective, std::vector<Eigen::Matrix2cd>& factors,
               const SearchConfig& cfg) {
  double f = objective.value(factors);
  double eta = 0.25;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    const RealVector g = objective.gradient(factors);
    const double gnorm2 = g.squaredNorm();
    if (gnorm2 < cfg.gradient_tol * cfg.gradient_tol) break;
    bool improved = false;
    eta = std::min(eta * 2.0, 4.0);
    while (eta > cfg.step_tol) {
      std::vector<Eigen::Matrix2cd> trial = factors;
      for (int k = 0; k < objective.n(); ++k) {
        const Eigen::Vector3d step = -eta * g.segment<3>(3 * k);
        trial[k] = su2_exp(step) * trial[k];
      }
      const double ft = objective.value(trial);
      if (ft < f - 1e-4 * eta * gnorm2) {
        factors = std::move(trial);
        f = ft;
        improved = true;
        break;
      }
      eta *= 0.5;
    }
    if (!improved) break;
    if (f < 1e-24) break;
  }
  return f;
}

// Nelder-Mead polish over the flat 3n parameters.
double nelder_mead(const OrbitObjective& objective, RealVector& theta, int max_evals) {
  const int dim = static_cast<int>(theta.size());
  std::vector<std::pair<double, RealVector>> simplex;
  simplex.reserve(dim + 1);
  simplex.emplace_back(objective.value_at(theta), theta);
  for (int i = 0; i < dim; ++i) {
    RealVector p = theta;
    p(i) += 0.4;
    simplex.emplace_back(objective.value_at(p), p);
  }
  int evals = dim + 1;
  const auto by_value = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(simplex.begin(), simplex.end(), by_value);
  while (evals < max_evals) {
    if (simplex.back().first - simplex.front().first < 1e-16) break;
    RealVector centroid = RealVector::Zero(dim);
    for (int i = 0; i < dim; ++i) centroid += simplex[i].second;
    centroid /= dim;
    const RealVector& worst = simplex.back().second;

    RealVector reflected = centroid + (centroid - worst);
    double fr = objective.value_at(reflected);
    ++evals;
    if (fr < simplex.front().first) {
      RealVector expanded = centroid + 2.0 * (centroid - worst);
      const double fe = objective.value_at(expanded);
      ++evals;
      simplex.back() = fe < fr ? std::make_pair(fe, expanded) : std::make_pair(fr, reflected);
    } else if (fr < simplex[dim - 1].first) {
      simplex.back() = {fr, reflected};
    } else {
      RealVector contracted = centroid + 0.5 * (worst - centroid);
      const double fc = objective.value_at(contracted);
      ++evals;
      if (fc < simplex.back().first) {
        simplex.back() = {fc, contracted};
      } else {
        for (int i = 1; i <= dim; ++i) {
          simplex[i].second =
              simplex.front().second + 0.5 * (simplex[i].second - simplex.front().second);
          simplex[i].first = objective.value_at(simplex[i].second);
        }
        evals += dim;
      }
    }
    std::sort(simplex.begin(), simplex.end(), by_value);
  }
  theta = simplex.front().second;
  return simplex.front().first;
}

LocalAlgebraElement extract_parameters(const std::vector<Eigen::Matrix2cd>& factors) {
  std::vector<Eigen::Vector3d> a(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) a[k] = su2_log(factors[k]);
  return LocalAlgebraElement(std::move(a));
}

void require_physical(const CoefficientVector& x, const char* label) {
  const DensityReport report = validate_density(reconstruct(x).rho, 1e-7);
  if (!report.physical())
    throw std::invalid_argument(std::string("orbit search: input '") + label +
                                "' is not a physical density operator");
}

}  // namespace

void SearchConfig::validate() const {
  if (restarts < 1 || max_iterations < 1)
    throw std::invalid_argument("SearchConfig: counts must be >= 1");
  if (step_tol <= 0.0 || gradient_tol <= 0.0 || distance_tol <= 0.0)
    throw std::invalid_argument("SearchConfig: tolerances must be positive");
}

OrbitDistanceResult orbit_distance(const CoefficientVector& x, const CoefficientVector& y,
                                   const SearchConfig& cfg) {
  cfg.validate();
  if (x.n != y.n) throw std::invalid_argument("orbit_distance: qubit count mismatch");
  require_physical(x, "x");
  require_physical(y, "y");

  const ComplexMatrix m = i_rho(x);
  const ComplexMatrix target = i_rho(y);
  const OrbitObjective objective(m, target, x.n);

  double best_f = std::numeric_limits<double>::infinity();
  LocalAlgebraElement best_witness = LocalAlgebraElement::zero(x.n);

  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(splitmix64(cfg.seed + static_cast<std::uint64_t>(r)));
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    std::vector<Eigen::Matrix2cd> factors(x.n);
    for (int k = 0; k < x.n; ++k) {
      Eigen::Vector3d theta = Eigen::Vector3d::Zero();
      if (r > 0) theta = Eigen::Vector3d(angle(rng), angle(rng), angle(rng));
      factors[k] = su2_exp(theta);
    }
    double f = descend(objective, factors, cfg);
    LocalAlgebraElement witness = extract_parameters(factors);
    if (f > cfg.distance_tol * cfg.distance_tol) {
      RealVector theta = witness.flat();
      const double fnm = nelder_mead(objective, theta, cfg.max_iterations);
      if (fnm < f) {
        f = fnm;
        witness = LocalAlgebraElement::from_flat(theta);
      }
    }
    if (f < best_f) {
      best_f = f;
      best_witness = witness;
    }
    if (std::sqrt(best_f) <= 0.1 * cfg.distance_tol) break;
  }
  return OrbitDistanceResult{std::sqrt(std::max(best_f, 0.0)), std::move(best_witness)};
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::equivalent: return "equivalent";
    case Equivalence::distinct: return "distinct";
    default: return "inconclusive";
  }
}

EquivalenceVerdict locally_equivalent(const CoefficientVector& x, const CoefficientVector& y,
                                      const SearchConfig& cfg) {
  cfg.validate();
  if (x.n != y.n) throw std::invalid_argument("locally_equivalent: qubit count mismatch");

  EquivalenceVerdict verdict;

  // Ad preserves spectra, so differing eigenvalues settle it immediately.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ex(reconstruct(x).rho, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ey(reconstruct(y).rho, Eigen::EigenvaluesOnly);
  if ((ex.eigenvalues() - ey.eigenvalues()).cwiseAbs().maxCoeff() > 1e-9) {
    verdict.status = Equivalence::distinct;
    verdict.separating_invariant = "spectrum";
    return verdict;
  }

  if (x.n <= 2) {
    const InvariantComparison cmp =
        invariants_equal(invariant_record(x), invariant_record(y), 1e-9);
    if (!cmp.equal) {
      verdict.status = Equivalence::distinct;
      verdict.separating_invariant = cmp.separating;
      return verdict;
    }
  }

  OrbitDistanceResult result = orbit_distance(x, y, cfg);
  if (result.distance > cfg.distance_tol && x.n <= 2) {
    // the invariant set is complete here, so spend one escalated retry
    SearchConfig retry = cfg;
    retry.restarts *= 4;
    retry.seed = splitmix64(cfg.seed ^ 0xa5a5a5a5a5a5a5a5ULL);
    OrbitDistanceResult second = orbit_distance(x, y, retry);
    if (second.distance < result.distance) result = second;
    verdict.escalated = true;
  }

  verdict.distance = result.distance;
  if (result.distance <= cfg.distance_tol) {
    // re-assert the witness from scratch before claiming equivalence
    const ComplexMatrix u = local_exp(result.witness);
    const double check = (u * i_rho(x) * u.adjoint() - i_rho(y)).norm();
    if (check <= cfg.distance_tol) {
      verdict.status = Equivalence::equivalent;
      verdict.witness = result.witness;
      verdict.distance = check;
      return verdict;
    }
  }
  verdict.status = Equivalence::inconclusive;
  return verdict;
}

CoefficientVector random_state(int n, Purity purity, std::uint64_t seed, int terms) {
  if (n < 1) throw std::invalid_argument("random_state: n must be >= 1");
  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::int64_t dim = matrix_dim(n);
  const auto random_projector = [&]() {
    Eigen::VectorXcd psi(dim);
    for (std::int64_t i = 0; i < dim; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
    psi.normalize();
    return ComplexMatrix(psi * psi.adjoint());
  };
  ComplexMatrix rho;
  if (purity == Purity::pure) {
    rho = random_projector();
  } else {
    if (terms <= 0) terms = static_cast<int>(dim);
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    rho = ComplexMatrix::Zero(dim, dim);
    double total = 0.0;
    for (int t = 0; t < terms; ++t) {
      const double w = weight(rng);
      rho += w * random_projector();
      total += w;
    }
    rho /= total;
  }
  return decompose(DensityMatrix(n, std::move(rho)));
}

}  // namespace entangle
