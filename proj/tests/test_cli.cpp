#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "entangle/state_io.hpp"
#include "json.hpp"
#include "test_support.hpp"

using namespace entangle;
using namespace entangle::testing;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  json body;
  std::string raw;
};

std::string cli_binary() {
  const char* path = std::getenv("ENTANGLE_CLI");
  REQUIRE_MESSAGE(path != nullptr, "ENTANGLE_CLI must point at the built binary");
  return path;
}

CliResult run_cli(const std::string& args) {
  const std::string command = cli_binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buffer;
  while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe))
    result.raw.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!result.raw.empty() && result.raw.front() == '{')
    result.body = json::parse(result.raw, nullptr, false);
  return result;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/entangle_cli_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

TempFile write_state(const std::string& name, const CoefficientVector& x) {
  TempFile tmp(name);
  write_json_file(tmp.path, state_to_json(x));
  return tmp;
}

}  // namespace

TEST_CASE("decompose subcommand") {
  const TempFile bell = write_state("bell.json", bell_coefficients());
  const CliResult r = run_cli("decompose --state " + bell.path);
  REQUIRE(r.exit_code == 0);
  REQUIRE_FALSE(r.body.is_discarded());
  CHECK(r.body["command"] == "decompose");
  CHECK(r.body["results"]["n"] == 2);
  CHECK(r.body["results"]["coefficients"][0] == -0.5);
  CHECK(r.body["results"]["coefficients"][5] == 0.5);
  CHECK(r.body["results"]["blocks"]["x00"] == -0.5);
  CHECK(r.body["inputs"]["state"]["digest"].get<std::string>().size() == 16);
  CHECK(r.body["wall_time_s"].get<double>() >= 0.0);
}

TEST_CASE("decompose accepts matrix-format files") {
  TempFile tmp("bell_matrix.json");
  write_json_file(tmp.path, state_to_json(DensityMatrix(2, bell_rho())));
  const CliResult r = run_cli("decompose --state " + tmp.path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.body["results"]["coefficients"][10] == doctest::Approx(-0.5));
}

TEST_CASE("dim subcommand") {
  const TempFile bell = write_state("dim_bell.json", bell_coefficients());
  const CliResult r = run_cli("dim --state " + bell.path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.body["results"]["orbit_dimension"] == 3);

  const TempFile mixed = write_state("dim_mixed.json", maximally_mixed(2));
  CHECK(run_cli("dim --state " + mixed.path).body["results"]["orbit_dimension"] == 0);
}

TEST_CASE("invariants subcommand") {
  const TempFile bell = write_state("inv_bell.json", bell_coefficients());
  const CliResult r = run_cli("invariants --state " + bell.path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.body["results"]["complete"] == true);
  CHECK(r.body["results"]["invariants"]["Tr(Z)"] == doctest::Approx(0.75));
  CHECK(r.body["results"]["invariants"]["det(x**)"] == doctest::Approx(0.125));

  const TempFile ghz = write_state("inv_ghz.json", maximally_mixed(3));
  const CliResult r3 = run_cli("invariants --state " + ghz.path);
  REQUIRE(r3.exit_code == 0);
  CHECK(r3.body["results"]["complete"] == false);
  CHECK(r3.body["results"]["invariants"].contains("Tr(rho^2)"));
}

TEST_CASE("equiv subcommand exit codes") {
  const TempFile bell = write_state("eq_bell.json", bell_coefficients());
  const TempFile ket00 = write_state("eq_ket00.json", ket00_coefficients());

  SUBCASE("equivalent pair exits 0 with a witness") {
    TempFile phi_minus("eq_phiminus.json");
    write_json_file(phi_minus.path, state_to_json(decompose(DensityMatrix(2, four_bell_states()[1]))));
    const CliResult r =
        run_cli("equiv --a " + bell.path + " --b " + phi_minus.path + " --restarts 8");
    CHECK(r.exit_code == 0);
    CHECK(r.body["results"]["status"] == "equivalent");
    CHECK(r.body["results"]["witness"].size() == 2);
  }

  SUBCASE("distinct pair exits 3 with the separating invariant") {
    const CliResult r = run_cli("equiv --a " + bell.path + " --b " + ket00.path);
    CHECK(r.exit_code == 3);
    CHECK(r.body["results"]["status"] == "distinct");
    CHECK(r.body["results"]["separating_invariant"] == "Tr(Z)");
  }

  SUBCASE("self comparison exits 0") {
    const CliResult r = run_cli("equiv --a " + bell.path + " --b " + bell.path);
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("discover subcommand") {
  const CliResult r = run_cli("discover --n 1 --degree 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.body["results"]["kernel_dimension"] == 2);
  CHECK(r.body["results"]["invariants"].size() == 2);
  CHECK(r.body["results"]["invariants"][0].contains("monomials"));

  SUBCASE("budget refusal is an input error") {
    const CliResult refused = run_cli("discover --n 3 --degree 3 --budget 100");
    CHECK(refused.exit_code == 2);
  }
}

TEST_CASE("bloch subcommand") {
  RealVector x(4);
  x << -1, 0.3, 0, 0.4;
  const TempFile state = write_state("bloch.json", CoefficientVector(1, x));
  const CliResult r = run_cli("bloch --state " + state.path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.body["results"]["radius"] == doctest::Approx(0.5));
  CHECK(r.body["results"]["class"] == "mixed");
  CHECK(r.body["results"]["coordinates"][0] == doctest::Approx(0.3));

  SUBCASE("two-qubit input is rejected") {
    const TempFile bell = write_state("bloch_bell.json", bell_coefficients());
    CHECK(run_cli("bloch --state " + bell.path).exit_code == 2);
  }
}

TEST_CASE("random subcommand") {
  TempFile out_a("rand_a.json"), out_b("rand_b.json");
  const CliResult a = run_cli("random --n 2 --mixed --seed 7 --out " + out_a.path);
  const CliResult b = run_cli("random --n 2 --mixed --seed 7 --out " + out_b.path);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.body["results"]["digest"] == b.body["results"]["digest"]);
  const CoefficientVector x = load_state_file(out_a.path).to_coefficients();
  CHECK(validate_density(reconstruct(x).rho).physical());

  SUBCASE("purity flag is mandatory and exclusive") {
    CHECK(run_cli("random --n 2 --seed 7 --out /tmp/entangle_cli_none.json").exit_code == 2);
    CHECK(run_cli("random --n 2 --pure --mixed --seed 7 --out /tmp/entangle_cli_both.json")
              .exit_code == 2);
  }
}

TEST_CASE("input errors exit 2") {
  SUBCASE("missing file") {
    CHECK(run_cli("decompose --state /tmp/entangle_cli_missing.json").exit_code == 2);
  }

  SUBCASE("malformed JSON") {
    TempFile tmp("bad.json");
    std::ofstream(tmp.path) << "{ not json";
    CHECK(run_cli("decompose --state " + tmp.path).exit_code == 2);
  }

  SUBCASE("schema violation") {
    TempFile tmp("schema.json");
    std::ofstream(tmp.path) << R"({"n": 2, "format": "coefficients"})";
    CHECK(run_cli("dim --state " + tmp.path).exit_code == 2);
  }

  SUBCASE("non-Hermitian matrix") {
    TempFile tmp("nonherm.json");
    std::ofstream(tmp.path)
        << R"({"n": 1, "format": "matrix", "matrix": [[[0.5, 0], [1, 0]], [[0, 0], [0.5, 0]]]})";
    CHECK(run_cli("decompose --state " + tmp.path).exit_code == 2);
  }
}
