#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "entangle/pauli.hpp"

#include "json.hpp"

/// JSON state files: {"n": int, "format": "matrix"|"coefficients",
/// "matrix": row-major array of rows of [re, im] pairs,
/// "coefficients": flat array of 4^n reals in base-4 index order}.
/// Exactly one of "matrix"/"coefficients" is present.
namespace entangle {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StateFile {
  int n = 0;
  std::optional<DensityMatrix> matrix;
  std::optional<CoefficientVector> coefficients;

  /// Either the stored coefficients or decompose() of the stored matrix.
  CoefficientVector to_coefficients(double tol = 1e-9) const;
};

StateFile parse_state(const nlohmann::json& j);
StateFile load_state_file(const std::string& path);

nlohmann::json state_to_json(const DensityMatrix& m);
nlohmann::json state_to_json(const CoefficientVector& x);

/// Deterministic serialization (2-space indent, trailing newline).
void write_json_file(const std::string& path, const nlohmann::json& j);

/// FNV-1a hash of the file bytes, as fixed-width hex. Used in run reports.
std::string file_digest(const std::string& path);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace entangle
