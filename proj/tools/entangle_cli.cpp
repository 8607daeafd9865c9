// entangle: classify n-qubit states under local unitary transformations.
//
// Subcommands: decompose, dim, invariants, equiv, discover, bloch, random.
// Exit codes: 0 success/equivalent, 1 internal error, 2 invalid input,
// 3 distinct, 4 inconclusive.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "entangle/discovery.hpp"
#include "entangle/invariants.hpp"
#include "entangle/orbit.hpp"
#include "entangle/state_io.hpp"
#include "entangle/tangent.hpp"

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ENTANGLE_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

json record_to_json(const entangle::InvariantRecord& rec) {
  json values = json::object();
  for (const auto& [name, value] : rec.values) values[name] = value;
  return values;
}

json witness_to_json(const entangle::LocalAlgebraElement& w) {
  json out = json::array();
  for (const auto& a : w.a) out.push_back({a(0), a(1), a(2)});
  return out;
}

struct Report {
  json body;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Report(const std::string& command) {
    body["command"] = command;
    body["inputs"] = json::object();
    body["results"] = json::object();
    body["tolerances"] = json::object();
  }

  void input_file(const std::string& key, const std::string& path) {
    body["inputs"][key] = {{"path", path}, {"digest", entangle::file_digest(path)}};
  }

  void emit() {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    body["wall_time_s"] = std::chrono::duration<double>(elapsed).count();
    std::cout << body.dump(2) << "\n";
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Local-unitary classification of n-qubit states"};
  app.require_subcommand(1);

  std::string state_path, a_path, b_path, out_path;
  double dim_tol = 1e-8;
  double kernel_tol = 1e-10;
  double herm_tol = 1e-9;
  std::int64_t budget = 20000;
  int n = 1, degree = 1;
  entangle::SearchConfig cfg;
  cfg.seed = default_seed();
  std::uint64_t seed = default_seed();
  bool pure = false, mixed = false;

  auto* cmd_decompose = app.add_subcommand("decompose", "Print the Pauli coefficient vector");
  cmd_decompose->add_option("--state", state_path, "state file")->required();

  auto* cmd_dim = app.add_subcommand("dim", "Print the entanglement-class (orbit) dimension");
  cmd_dim->add_option("--state", state_path, "state file")->required();
  cmd_dim->add_option("--tol", dim_tol, "relative rank tolerance");

  auto* cmd_invariants = app.add_subcommand("invariants", "Print the invariant record");
  cmd_invariants->add_option("--state", state_path, "state file")->required();

  auto* cmd_equiv = app.add_subcommand("equiv", "Decide local equivalence of two states");
  cmd_equiv->add_option("--a", a_path, "first state file")->required();
  cmd_equiv->add_option("--b", b_path, "second state file")->required();
  cmd_equiv->add_option("--restarts", cfg.restarts, "search restarts");
  cmd_equiv->add_option("--seed", cfg.seed, "search seed");
  cmd_equiv->add_option("--tol", cfg.distance_tol, "equivalence distance tolerance");

  auto* cmd_discover = app.add_subcommand("discover", "Find polynomial invariants of one degree");
  cmd_discover->add_option("--n", n, "qubit count")->required();
  cmd_discover->add_option("--degree", degree, "homogeneous degree")->required();
  cmd_discover->add_option("--tol", kernel_tol, "nullspace singular-value tolerance");
  cmd_discover->add_option("--budget", budget, "monomial count budget");

  auto* cmd_bloch = app.add_subcommand("bloch", "Print Bloch coordinates of a 1-qubit state");
  cmd_bloch->add_option("--state", state_path, "state file")->required();

  auto* cmd_random = app.add_subcommand("random", "Write a random physical state file");
  cmd_random->add_option("--n", n, "qubit count")->required();
  cmd_random->add_flag("--pure", pure, "Haar-like pure state");
  cmd_random->add_flag("--mixed", mixed, "mixed state");
  cmd_random->add_option("--seed", seed, "rng seed");
  cmd_random->add_option("--out", out_path, "output state file")->required();

  CLI11_PARSE(app, argc, argv);

  if (cmd_decompose->parsed()) {
    Report report("decompose");
    report.input_file("state", state_path);
    report.body["tolerances"]["hermiticity"] = herm_tol;
    const auto x = entangle::load_state_file(state_path).to_coefficients(herm_tol);
    report.body["results"]["n"] = x.n;
    report.body["results"]["coefficients"] = entangle::state_to_json(x)["coefficients"];
    if (x.n == 2) {
      const auto blocks = entangle::two_qubit_blocks(x);
      report.body["results"]["blocks"] = {
          {"x00", blocks.x00},
          {"x0*", {blocks.x0s(0), blocks.x0s(1), blocks.x0s(2)}},
          {"x*0", {blocks.xs0(0), blocks.xs0(1), blocks.xs0(2)}},
          {"x**", entangle::matrix_to_json(blocks.xss.cast<entangle::Complex>())}};
    }
    report.emit();
    return 0;
  }

  if (cmd_dim->parsed()) {
    Report report("dim");
    report.input_file("state", state_path);
    report.body["tolerances"]["rank"] = dim_tol;
    const auto x = entangle::load_state_file(state_path).to_coefficients(herm_tol);
    report.body["results"]["n"] = x.n;
    report.body["results"]["orbit_dimension"] = entangle::orbit_dimension(x, dim_tol);
    report.emit();
    return 0;
  }

  if (cmd_invariants->parsed()) {
    Report report("invariants");
    report.input_file("state", state_path);
    const auto x = entangle::load_state_file(state_path).to_coefficients(herm_tol);
    report.body["results"]["n"] = x.n;
    if (x.n <= 2) {
      report.body["results"]["complete"] = true;
      report.body["results"]["invariants"] = record_to_json(entangle::invariant_record(x));
    } else {
      // no closed-form complete set here; spectral moments are necessary only
      report.body["results"]["complete"] = false;
      report.body["results"]["invariants"] = record_to_json(entangle::spectral_invariants(x));
    }
    report.emit();
    return 0;
  }

  if (cmd_equiv->parsed()) {
    Report report("equiv");
    report.input_file("a", a_path);
    report.input_file("b", b_path);
    report.body["seed"] = cfg.seed;
    report.body["tolerances"]["distance"] = cfg.distance_tol;
    report.body["tolerances"]["invariant_equality"] = 1e-9;
    const auto x = entangle::load_state_file(a_path).to_coefficients(herm_tol);
    const auto y = entangle::load_state_file(b_path).to_coefficients(herm_tol);
    const auto verdict = entangle::locally_equivalent(x, y, cfg);
    report.body["results"]["status"] = entangle::to_string(verdict.status);
    report.body["results"]["distance"] = verdict.distance;
    report.body["results"]["escalated"] = verdict.escalated;
    if (verdict.witness) report.body["results"]["witness"] = witness_to_json(*verdict.witness);
    if (verdict.separating_invariant)
      report.body["results"]["separating_invariant"] = *verdict.separating_invariant;
    report.emit();
    switch (verdict.status) {
      case entangle::Equivalence::equivalent: return 0;
      case entangle::Equivalence::distinct: return 3;
      default: return 4;
    }
  }

  if (cmd_discover->parsed()) {
    Report report("discover");
    report.body["tolerances"]["nullspace"] = kernel_tol;
    report.body["inputs"]["n"] = n;
    report.body["inputs"]["degree"] = degree;
    const auto kernel = entangle::invariant_kernel(n, degree, kernel_tol, budget);
    report.body["results"]["kernel_dimension"] = kernel.size();
    json polys = json::array();
    for (const auto& p : kernel) polys.push_back(entangle::invariant_to_json(p));
    report.body["results"]["invariants"] = std::move(polys);
    report.emit();
    return 0;
  }

  if (cmd_bloch->parsed()) {
    Report report("bloch");
    report.input_file("state", state_path);
    const auto x = entangle::load_state_file(state_path).to_coefficients(herm_tol);
    if (x.n != 1) throw entangle::ParseError("bloch: requires a 1-qubit state");
    const double radius = entangle::one_qubit_invariant(x);
    report.body["results"]["coordinates"] = {x.x(1), x.x(2), x.x(3)};
    report.body["results"]["radius"] = radius;
    report.body["results"]["class"] = radius < 1e-9          ? "maximally mixed"
                                      : radius > 1.0 - 1e-9 ? "pure"
                                                            : "mixed";
    report.emit();
    return 0;
  }

  if (cmd_random->parsed()) {
    if (pure == mixed)
      throw entangle::ParseError("random: exactly one of --pure/--mixed is required");
    Report report("random");
    report.body["seed"] = seed;
    const auto x = entangle::random_state(
        n, pure ? entangle::Purity::pure : entangle::Purity::mixed, seed);
    entangle::write_json_file(out_path, entangle::state_to_json(x));
    report.body["results"]["n"] = n;
    report.body["results"]["out"] = out_path;
    report.body["results"]["digest"] = entangle::file_digest(out_path);
    report.emit();
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const entangle::SizeBudgetError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const entangle::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
