#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "entangle/invariants.hpp"
#include "entangle/lie.hpp"
#include "entangle/pauli.hpp"

/// Constructive local-equivalence decisions: invariant screening plus
/// multi-start minimization of the orbit distance
///   min_theta || Ad_{local_exp(theta)}(i rho) - i rho' ||_F
/// over the local unitary group, returning a witness when found.
namespace entangle {

struct SearchConfig {
  int restarts = 32;
  int max_iterations = 500;
  double step_tol = 1e-14;        // line search floor
  double gradient_tol = 1e-12;    // convergence on the Riemannian gradient
  double distance_tol = 1e-6;     // equivalence acceptance threshold
  std::uint64_t seed = 0;

  void validate() const;
};

struct OrbitDistanceResult {
  double distance = 0.0;
  LocalAlgebraElement witness;
};

/// Minimum Frobenius distance over the configured restarts; deterministic
/// given the seed (restart 0 starts from theta = 0). Requires physical inputs.
OrbitDistanceResult orbit_distance(const CoefficientVector& x, const CoefficientVector& y,
                                   const SearchConfig& cfg = {});

enum class Equivalence { equivalent, distinct, inconclusive };

std::string to_string(Equivalence e);

struct EquivalenceVerdict {
  Equivalence status = Equivalence::inconclusive;
  std::optional<LocalAlgebraElement> witness;
  double distance = 0.0;
  std::optional<std::string> separating_invariant;
  bool escalated = false;  // true when the n <= 2 retry with more restarts ran
};

/// Decision pipeline: spectral pre-check, then invariant comparison (n <= 2),
/// then orbit search; for n <= 2 an unresolved search is retried once with
/// more restarts before conceding inconclusive.
EquivalenceVerdict locally_equivalent(const CoefficientVector& x, const CoefficientVector& y,
                                      const SearchConfig& cfg = {});

enum class Purity { pure, mixed };

/// Seeded random physical state; pure draws a Haar-like projector, mixed a
/// normalized positive combination of `terms` random projectors
/// (terms = 0 means 2^n).
CoefficientVector random_state(int n, Purity purity, std::uint64_t seed, int terms = 0);

}  // namespace entangle
