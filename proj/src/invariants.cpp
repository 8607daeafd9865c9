#include "entangle/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entangle {

double one_qubit_invariant(const CoefficientVector& x) {
  if (x.n != 1) throw std::invalid_argument("one_qubit_invariant: requires n = 1");
  return x.x.tail<3>().norm();
}

TwoQubitBlocks two_qubit_blocks(const CoefficientVector& x) {
  if (x.n != 2) throw std::invalid_argument("two_qubit_blocks: requires n = 2");
  TwoQubitBlocks b;
  b.x00 = x.x(0);
  for (int j = 0; j < 3; ++j) {
    b.x0s(j) = x.x(j + 1);            // x_{0,j+1}
    b.xs0(j) = x.x(4 * (j + 1));      // x_{j+1,0}
    for (int k = 0; k < 3; ++k) b.xss(j, k) = x.x(4 * (j + 1) + (k + 1));
  }
  // The quadratic form must carry the same (second-slot) index as x0*, so Z
  // contracts the first index of x** with itself.
  b.z = b.xss.transpose() * b.xss;
  return b;
}

InvariantRecord two_qubit_invariants(const CoefficientVector& x) {
  const TwoQubitBlocks b = two_qubit_blocks(x);
  const Eigen::Matrix3d z2 = b.z * b.z;
  const Eigen::Vector3d zx = b.z * b.x0s;
  const Eigen::Vector3d z2x = z2 * b.x0s;
  InvariantRecord rec;
  rec.n = 2;
  rec.values = {
      {"Tr(Z)", b.z.trace()},
      {"Tr(Z^2)", z2.trace()},
      {"det(x**)", b.xss.determinant()},
      {"x0*.x0*", b.x0s.dot(b.x0s)},
      {"x0*.Z.x0*", b.x0s.dot(zx)},
      {"x0*.Z^2.x0*", b.x0s.dot(z2x)},
      {"x0*.x**.x*0", b.x0s.dot(b.xss.transpose() * b.xs0)},
      {"x0*.Z.x**.x*0", b.x0s.dot(b.z * b.xss.transpose() * b.xs0)},
      {"x0*.Z^2.x**.x*0", b.x0s.dot(z2 * b.xss.transpose() * b.xs0)},
      {"x0*.(Zx0*)x(Z^2x0*)", b.x0s.dot(zx.cross(z2x))},
  };
  return rec;
}

InvariantRecord invariant_record(const CoefficientVector& x) {
  if (x.n == 1) return InvariantRecord{1, {{"radius", one_qubit_invariant(x)}}};
  if (x.n == 2) return two_qubit_invariants(x);
  throw std::domain_error(
      "invariant_record: no complete closed-form set for n >= 3; "
      "use spectral_invariants as a necessary condition or orbit search");
}

InvariantRecord spectral_invariants(const CoefficientVector& x) {
  InvariantRecord rec;
  rec.n = x.n;
  rec.values.emplace_back("x0...0", x.x(0));
  const ComplexMatrix rho = reconstruct(x).rho;
  ComplexMatrix power = rho;
  for (std::int64_t k = 2; k <= matrix_dim(x.n); ++k) {
    power = power * rho;
    rec.values.emplace_back("Tr(rho^" + std::to_string(k) + ")", power.trace().real());
  }
  return rec;
}

InvariantComparison invariants_equal(const InvariantRecord& a, const InvariantRecord& b,
                                     double tol) {
  if (a.n != b.n) throw std::invalid_argument("invariants_equal: qubit count mismatch");
  if (a.n != 1 && a.n != 2)
    throw std::domain_error(
        "invariants_equal: complete invariant sets only known for n in {1,2}; "
        "use orbit search for larger systems");
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("invariants_equal: record size mismatch");
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double va = a.values[i].second;
    const double vb = b.values[i].second;
    const double scale = std::max({1.0, std::abs(va), std::abs(vb)});
    if (std::abs(va - vb) > tol * scale) return {false, a.values[i].first};
  }
  return {true, ""};
}

}  // namespace entangle
