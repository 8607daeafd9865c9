#include "entangle/pauli.hpp"

#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace entangle;
using namespace entangle::testing;

TEST_CASE("pauli_tensor basic matrices") {
  const Complex half_i(0.0, 0.5);

  SUBCASE("xi_0 is -(i/2) I") {
    const ComplexMatrix m = pauli_tensor(PauliIndex({0}));
    CHECK(m(0, 0) == -half_i);
    CHECK(m(1, 1) == -half_i);
    CHECK(m(0, 1) == Complex(0.0));
  }

  SUBCASE("xi_1 has -i/2 off the diagonal") {
    const ComplexMatrix m = pauli_tensor(PauliIndex({1}));
    CHECK(m(0, 1) == -half_i);
    CHECK(m(1, 0) == -half_i);
    CHECK(m(0, 0) == Complex(0.0));
  }

  SUBCASE("xi_11 is anti-diagonal with -i/2 entries") {
    const ComplexMatrix m = pauli_tensor(PauliIndex({1, 1}));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        CHECK(m(r, c) == (r + c == 3 ? -half_i : Complex(0.0)));
  }

  SUBCASE("invalid digit rejected") {
    CHECK_THROWS_AS(PauliIndex({4}), std::invalid_argument);
    CHECK_THROWS_AS(PauliIndex({-1}), std::invalid_argument);
  }
}

TEST_CASE("PauliIndex linearization is base-4 big-endian") {
  CHECK(PauliIndex({1, 0}).linear() == 4);
  CHECK(PauliIndex({2, 3}).linear() == 11);
  CHECK(PauliIndex::from_linear(2, 11).digits == std::vector<int>{2, 3});
  CHECK(PauliIndex::from_linear(3, 0).digits == std::vector<int>{0, 0, 0});
}

TEST_CASE("kronecker_sum") {
  const ComplexMatrix zero2 = ComplexMatrix::Zero(2, 2);

  SUBCASE("zero plus zero") {
    CHECK(kronecker_sum(zero2, zero2).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("xi_1 [+] 0 equals xi_10") {
    const ComplexMatrix lhs = kronecker_sum(pauli_tensor(PauliIndex({1})), zero2);
    const ComplexMatrix rhs = pauli_tensor(PauliIndex({1, 0}));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
  }

  SUBCASE("trace is dim(B) Tr(A) + dim(A) Tr(B)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int t = 0; t < 10; ++t) {
      ComplexMatrix a(2, 2), b(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          a(i, j) = Complex(unit(rng), unit(rng));
          b(i, j) = Complex(unit(rng), unit(rng));
        }
      const Complex expected = 2.0 * a.trace() + 2.0 * b.trace();
      CHECK(std::abs(kronecker_sum(a, b).trace() - expected) < 1e-14);
    }
  }

  SUBCASE("non-square input rejected") {
    CHECK_THROWS_AS(kronecker_sum(ComplexMatrix::Zero(2, 3), zero2), std::invalid_argument);
  }
}

TEST_CASE("decompose worked examples") {
  SUBCASE("Bell state coefficients") {
    const CoefficientVector x = decompose(DensityMatrix(2, bell_rho()));
    const CoefficientVector expected = bell_coefficients();
    CHECK((x.x - expected.x).cwiseAbs().maxCoeff() < 1e-14);
  }

  SUBCASE("maximally mixed one-qubit state") {
    const CoefficientVector x =
        decompose(DensityMatrix(1, 0.5 * ComplexMatrix::Identity(2, 2)));
    CHECK(x.x(0) == doctest::Approx(-1.0));
    CHECK(x.x.tail<3>().cwiseAbs().maxCoeff() < 1e-15);
  }

  SUBCASE("|00><00|") {
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = 1.0;
    const CoefficientVector x = decompose(DensityMatrix(2, rho));
    CHECK((x.x - ket00_coefficients().x).cwiseAbs().maxCoeff() < 1e-14);
  }

  SUBCASE("non-Hermitian input rejected") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(decompose(DensityMatrix(1, m)), std::invalid_argument);
  }
}

TEST_CASE("reconstruct worked examples") {
  SUBCASE("zero vector gives zero matrix") {
    const CoefficientVector x(1, RealVector::Zero(4));
    CHECK(reconstruct(x).rho.cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("Bell coefficients give the Bell matrix") {
    const DensityMatrix m = reconstruct(bell_coefficients());
    CHECK((m.rho - bell_rho()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("validate_density") {
  SUBCASE("I/4 is physical with min eigenvalue 0.25") {
    const DensityReport report = validate_density(0.25 * ComplexMatrix::Identity(4, 4));
    CHECK(report.physical());
    CHECK(report.min_eigenvalue == doctest::Approx(0.25));
  }

  SUBCASE("Bell is physical with eigenvalues {1,0,0,0}") {
    const DensityReport report = validate_density(bell_rho());
    CHECK(report.physical());
    CHECK(report.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("diag(2,-1,0,0) has unit trace but is not PSD") {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 2.0;
    m(1, 1) = -1.0;
    const DensityReport report = validate_density(m);
    CHECK(report.unit_trace);
    CHECK(report.hermitian);
    CHECK_FALSE(report.psd);
    CHECK(report.min_eigenvalue == doctest::Approx(-1.0));
  }
}

TEST_CASE("xi-basis orthogonality: Tr(xi_a xi_b^dag) = 2^{n-2} delta_ab") {
  for (int n = 1; n <= 3; ++n) {
    const double scale = std::pow(2.0, n - 2);
    const std::int64_t count = coefficient_count(n);
    // full pairwise check is O(16^n); sample pairs at n=3
    const std::int64_t stride = n < 3 ? 1 : 7;
    for (std::int64_t a = 0; a < count; a += stride) {
      const ComplexMatrix xa = pauli_tensor(PauliIndex::from_linear(n, a));
      for (std::int64_t b = 0; b < count; b += stride) {
        const ComplexMatrix xb = pauli_tensor(PauliIndex::from_linear(n, b));
        const Complex tr = (xa * xb.adjoint()).trace();
        CHECK(std::abs(tr.imag()) == 0.0);
        CHECK(tr.real() == doctest::Approx(a == b ? scale : 0.0));
      }
    }
  }
}

TEST_CASE("pauli_tensor outputs are exactly skew-Hermitian") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 3; ++n) {
    std::uniform_int_distribution<std::int64_t> pick(0, coefficient_count(n) - 1);
    for (int t = 0; t < 8; ++t) {
      const ComplexMatrix m = pauli_tensor(PauliIndex::from_linear(n, pick(rng)));
      CHECK((m.adjoint() + m).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("round-trip decompose(reconstruct(x)) = x up to n = 4") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 3; ++t) {
      const CoefficientVector x = random_coefficients(n, rng);
      const CoefficientVector back = decompose(reconstruct(x));
      CHECK((back.x - x.x).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("physical-trace pin: x_0...0 = -2^{1-n} for unit-trace Hermitian input") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int n = 1; n <= 3; ++n) {
    const std::int64_t dim = matrix_dim(n);
    ComplexMatrix m(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i)
      for (std::int64_t j = 0; j < dim; ++j) m(i, j) = Complex(unit(rng), unit(rng));
    m = 0.5 * (m + m.adjoint()).eval();
    m += ((1.0 - m.trace()) / static_cast<double>(dim)) * ComplexMatrix::Identity(dim, dim);
    const CoefficientVector x = decompose(DensityMatrix(n, m));
    CHECK(x.x(0) == doctest::Approx(-std::pow(2.0, 1.0 - n)).epsilon(1e-12));
  }
}
