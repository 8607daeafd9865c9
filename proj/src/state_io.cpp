#include "entangle/state_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace entangle {

CoefficientVector StateFile::to_coefficients(double tol) const {
  if (coefficients) return *coefficients;
  return decompose(*matrix, tol);
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("state file: 'matrix' must be a non-empty array of rows");
  const std::size_t dim = j.size();
  ComplexMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto& row = j.at(r);
    if (!row.is_array() || row.size() != dim)
      throw ParseError("state file: 'matrix' must be square");
    for (std::size_t c = 0; c < dim; ++c) {
      const auto& entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
          !entry.at(1).is_number())
        throw ParseError("state file: matrix entries must be [re, im] pairs");
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

StateFile parse_state(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("state file: top level must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw ParseError("state file: missing integer field 'n'");
  const int n = j.at("n").get<int>();
  if (n < 1) throw ParseError("state file: 'n' must be >= 1");
  if (!j.contains("format") || !j.at("format").is_string())
    throw ParseError("state file: missing string field 'format'");
  const std::string format = j.at("format").get<std::string>();
  const bool has_matrix = j.contains("matrix");
  const bool has_coeffs = j.contains("coefficients");
  if (has_matrix == has_coeffs)
    throw ParseError("state file: exactly one of 'matrix'/'coefficients' must be present");

  StateFile state;
  state.n = n;
  if (format == "matrix") {
    if (!has_matrix) throw ParseError("state file: format 'matrix' requires field 'matrix'");
    ComplexMatrix m = matrix_from_json(j.at("matrix"));
    if (m.rows() != matrix_dim(n))
      throw ParseError("state file: matrix dimension does not match 2^n");
    state.matrix = DensityMatrix(n, std::move(m));
  } else if (format == "coefficients") {
    if (!has_coeffs)
      throw ParseError("state file: format 'coefficients' requires field 'coefficients'");
    const auto& arr = j.at("coefficients");
    if (!arr.is_array() || static_cast<std::int64_t>(arr.size()) != coefficient_count(n))
      throw ParseError("state file: 'coefficients' must have length 4^n");
    RealVector x(coefficient_count(n));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr.at(i).is_number()) throw ParseError("state file: coefficients must be numbers");
      x(static_cast<Eigen::Index>(i)) = arr.at(i).get<double>();
    }
    state.coefficients = CoefficientVector(n, std::move(x));
  } else {
    throw ParseError("state file: format must be 'matrix' or 'coefficients'");
  }
  return state;
}

StateFile load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("state file '" + path + "': " + e.what());
  }
  return parse_state(j);
}

nlohmann::json state_to_json(const DensityMatrix& m) {
  return {{"n", m.n}, {"format", "matrix"}, {"matrix", matrix_to_json(m.rho)}};
}

nlohmann::json state_to_json(const CoefficientVector& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (Eigen::Index i = 0; i < x.x.size(); ++i) coeffs.push_back(x.x(i));
  return {{"n", x.n}, {"format", "coefficients"}, {"coefficients", std::move(coeffs)}};
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file for digest: " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << h;
  return hex.str();
}

}  // namespace entangle
