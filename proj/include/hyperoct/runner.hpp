#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace hyperoct {

/// Configuration shared by all CLI commands. Invalid combinations raise
/// std::invalid_argument from run_command.
struct RunConfig {
  std::string command;  // gap | verify-main | verify-aldous | octopus | counterexample | decompose
  int n = 2;
  int trials = 10;
  std::uint64_t seed = 1;
  double density = 1.0;
  double tol = 1e-8;
  double epsilon = 1e-3;
  std::string rep = "regular";  // regular | pn | dn | d0n | jn
  std::string weights_file;     // empty: sample random weights per trial
  std::string family = "a";     // a | b | c
  std::string output = "json";  // json | csv
  int max_rank = 5;             // rank guard; raised by --allow-large / HYPEROCT_MAX_N
  int workers = 1;
};

/// Executes the configured command and returns the structured report:
///   {"command": ..., "config": {...}, "trials": [...], "summary": {...}}.
/// Trial records are deterministic for a fixed (command, config, seed) —
/// identical up to the wall_ms timing fields — regardless of the worker
/// count. Per-trial randomness is seeded as seed + trial index.
nlohmann::ordered_json run_command(const RunConfig& config);

/// 0 when summary.all_passed, 1 otherwise.
int report_exit_code(const nlohmann::ordered_json& report);

/// Flattens the per-trial records into CSV (header from the first record;
/// summary appended as '#'-prefixed comment lines).
std::string report_to_csv(const nlohmann::ordered_json& report);

}  // namespace hyperoct
