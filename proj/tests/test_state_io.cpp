#include "entangle/state_io.hpp"

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "test_support.hpp"

using namespace entangle;
using namespace entangle::testing;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/entangle_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("parse_state") {
  SUBCASE("coefficients format round-trips the Bell vector") {
    const json j = state_to_json(bell_coefficients());
    CHECK(j["format"] == "coefficients");
    CHECK(j["n"] == 2);
    const StateFile parsed = parse_state(j);
    REQUIRE(parsed.coefficients.has_value());
    CHECK((parsed.to_coefficients().x - bell_coefficients().x).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("matrix format round-trips the Bell matrix") {
    const json j = state_to_json(DensityMatrix(2, bell_rho()));
    CHECK(j["format"] == "matrix");
    const StateFile parsed = parse_state(j);
    REQUIRE(parsed.matrix.has_value());
    CHECK((parsed.matrix->rho - bell_rho()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((parsed.to_coefficients().x - bell_coefficients().x).cwiseAbs().maxCoeff() < 1e-14);
  }

  SUBCASE("missing n rejected") {
    json j = state_to_json(bell_coefficients());
    j.erase("n");
    CHECK_THROWS_AS(parse_state(j), ParseError);
  }

  SUBCASE("both matrix and coefficients rejected") {
    json j = state_to_json(bell_coefficients());
    j["matrix"] = state_to_json(DensityMatrix(2, bell_rho()))["matrix"];
    CHECK_THROWS_AS(parse_state(j), ParseError);
  }

  SUBCASE("neither payload rejected") {
    json j = state_to_json(bell_coefficients());
    j.erase("coefficients");
    CHECK_THROWS_AS(parse_state(j), ParseError);
  }

  SUBCASE("format/payload mismatch rejected") {
    json j = state_to_json(bell_coefficients());
    j["format"] = "matrix";
    CHECK_THROWS_AS(parse_state(j), ParseError);
  }

  SUBCASE("wrong coefficient count rejected") {
    json j = state_to_json(bell_coefficients());
    j["n"] = 1;
    CHECK_THROWS_AS(parse_state(j), ParseError);
  }

  SUBCASE("wrong matrix dimension rejected") {
    json j = state_to_json(DensityMatrix(2, bell_rho()));
    j["n"] = 3;
    CHECK_THROWS_AS(parse_state(j), ParseError);
  }
}

TEST_CASE("matrix JSON uses [re, im] entry pairs") {
  const json j = matrix_to_json(bell_rho());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  CHECK(j[0][0][0] == 0.5);
  CHECK(j[0][0][1] == 0.0);
  CHECK(j[0][3][0] == -0.5);
  const ComplexMatrix back = matrix_from_json(j);
  CHECK((back - bell_rho()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("load_state_file and write_json_file") {
  SUBCASE("write then load round-trips") {
    TempFile tmp("roundtrip.json");
    write_json_file(tmp.path, state_to_json(bell_coefficients()));
    const StateFile loaded = load_state_file(tmp.path);
    CHECK(loaded.n == 2);
    CHECK((loaded.to_coefficients().x - bell_coefficients().x).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("missing file raises ParseError") {
    CHECK_THROWS_AS(load_state_file("/tmp/entangle_test_does_not_exist.json"), ParseError);
  }

  SUBCASE("malformed JSON raises ParseError") {
    TempFile tmp("malformed.json");
    std::ofstream(tmp.path) << "{ not json";
    CHECK_THROWS_AS(load_state_file(tmp.path), ParseError);
  }

  SUBCASE("serialization is deterministic and newline-terminated") {
    TempFile a("det_a.json"), b("det_b.json");
    write_json_file(a.path, state_to_json(bell_coefficients()));
    write_json_file(b.path, state_to_json(bell_coefficients()));
    CHECK(file_digest(a.path) == file_digest(b.path));
    std::ifstream in(a.path, std::ios::binary);
    const std::string bytes((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
    REQUIRE_FALSE(bytes.empty());
    CHECK(bytes.back() == '\n');
  }
}

TEST_CASE("file_digest is a 16-hex-digit FNV-1a of the bytes") {
  TempFile tmp("digest.json");
  std::ofstream(tmp.path) << "abc";
  const std::string digest = file_digest(tmp.path);
  CHECK(digest.size() == 16);
  // FNV-1a 64-bit of "abc"
  CHECK(digest == "e71fa2190541574b");
}
