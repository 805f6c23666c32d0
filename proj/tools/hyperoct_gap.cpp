// hyperoct-gap: spectral gaps of weighted signed-permutation groups.
//
// Subcommands:
//   gap             spectral gap of one weighting against a chosen representation
//   verify-main     compare the full-group gap with the 2n-dimensional one
//   verify-aldous   transposition-only sweep on the symmetric subgroup
//   octopus         cone membership of w − θ(w) plus the rank-one identity
//   counterexample  sharpness families with competing per-representation gaps
//   decompose       block-diagonalization of the 2n-dimensional representation
//
// Reports are JSON (default) or CSV on stdout. Exit code: 0 when all
// trials pass, 1 when any fails, 2 on configuration or input errors.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperoct/runner.hpp"

namespace {

int resolve_max_rank(bool allow_large) {
  int max_rank = allow_large ? 6 : 5;
  if (const char* env = std::getenv("HYPEROCT_MAX_N")) {
    try {
      max_rank = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("HYPEROCT_MAX_N must be an integer");
    }
  }
  return std::min(max_rank, 8);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral gaps of weighted signed-permutation groups"};
  app.require_subcommand(1);

  hyperoct::RunConfig config;
  bool allow_large = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", config.n, "Rank n of the group")->capture_default_str();
    cmd->add_option("--trials", config.trials, "Number of trials")->capture_default_str();
    cmd->add_option("--seed", config.seed, "Base seed (trial i uses seed + i)")
        ->capture_default_str();
    cmd->add_option("--density", config.density,
                    "Inclusion probability for random weights, in [0, 1]")
        ->capture_default_str();
    cmd->add_option("--tol", config.tol, "Comparison tolerance")->capture_default_str();
    cmd->add_option("--epsilon", config.epsilon, "Counterexample perturbation size")
        ->capture_default_str();
    cmd->add_option("--rep", config.rep, "Representation: regular|pn|dn|d0n|jn")
        ->capture_default_str();
    cmd->add_option("--weights", config.weights_file, "JSON weights file");
    cmd->add_option("--family", config.family, "Counterexample family: a|b|c")
        ->capture_default_str();
    cmd->add_option("--output", config.output, "Report format: json|csv")
        ->capture_default_str();
    cmd->add_option("--workers", config.workers, "Concurrent trial workers")
        ->capture_default_str();
    cmd->add_flag("--allow-large", allow_large,
                  "Raise the rank guard from 5 to 6 (see also HYPEROCT_MAX_N)");
  };

  for (const char* name : {"gap", "verify-main", "verify-aldous", "octopus",
                           "counterexample", "decompose"}) {
    add_common(app.add_subcommand(name));
  }

  CLI11_PARSE(app, argc, argv);

  try {
    config.command = app.get_subcommands().front()->get_name();
    config.max_rank = resolve_max_rank(allow_large);
    const nlohmann::ordered_json report = hyperoct::run_command(config);
    if (config.output == "csv") {
      std::cout << hyperoct::report_to_csv(report);
    } else {
      std::cout << report.dump(2) << "\n";
    }
    return hyperoct::report_exit_code(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
