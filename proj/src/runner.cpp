#include "hyperoct/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hyperoct/class_a.hpp"
#include "hyperoct/reduction.hpp"
#include "hyperoct/spectral.hpp"

namespace hyperoct {

namespace {

using nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read weights file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Runs fn(0..count-1) on up to `workers` threads; records must not
/// depend on execution order. The first exception wins and is rethrown.
void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int threads = std::min(workers, count);
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

ordered_json gap_value_json(const GapReport& report) {
  if (report.infinite()) return nullptr;
  return report.value();
}

MatrixRep select_rep(const std::string& name, int n) {
  if (name == "pn") return permutation_p(n);
  if (name == "dn") return defining_w(n);
  if (name == "d0n") return lifted_defining_s(n);
  if (name == "jn") return sign_j(n);
  throw std::invalid_argument("unknown representation selector: " + name);
}

CounterexampleFamily parse_family(const std::string& family) {
  if (family == "a") return CounterexampleFamily::SignDominant;
  if (family == "b") return CounterexampleFamily::TranspositionDominant;
  if (family == "c") return CounterexampleFamily::EvenSets;
  throw std::invalid_argument("unknown counterexample family: " + family);
}

std::string family_name(CounterexampleFamily family) {
  switch (family) {
    case CounterexampleFamily::SignDominant: return "sign-dominant";
    case CounterexampleFamily::TranspositionDominant: return "transposition-dominant";
    case CounterexampleFamily::EvenSets: return "even-sets";
  }
  return "unknown";
}

struct CommandResult {
  std::vector<ordered_json> trials;
  double max_deviation = 0.0;
};

CommandResult cmd_gap(const RunConfig& config, int effective_n,
                      const std::vector<ClassAWeights>& weights) {
  const GroupIndex::RankGuard guard{config.max_rank};
  const GroupIndex idx = GroupIndex::whole_group(effective_n, guard);
  CommandResult result;
  result.trials.resize(weights.size());
  parallel_for(static_cast<int>(weights.size()), config.workers, [&](int i) {
    const auto start = clock_type::now();
    const ClassAWeights& caw = weights[static_cast<std::size_t>(i)];
    const WeightedElement w = caw.expand();
    const GapReport report =
        config.rep == "regular"
            ? cayley_gap(w, idx)
            : spectral_gap(w, select_rep(config.rep, effective_n), idx);
    ordered_json rec;
    rec["trial"] = i;
    rec["seed"] = config.seed + static_cast<std::uint64_t>(i);
    rec["digest"] = weight_digest(caw);
    rec["rep"] = config.rep;
    rec["dim"] = report.spectrum.dim;
    rec["trivial_multiplicity"] = report.trivial_multiplicity;
    rec["gap"] = gap_value_json(report);
    rec["gap_infinite"] = report.infinite();
    rec["lambda_min"] = report.spectrum.values.front();
    rec["lambda_max"] = report.spectrum.values.back();
    rec["pass"] = true;
    rec["wall_ms"] = ms_since(start);
    result.trials[static_cast<std::size_t>(i)] = std::move(rec);
  });
  return result;
}

CommandResult cmd_verify_main(const RunConfig& config) {
  require(config.n >= 2, "verify-main: n must be >= 2");
  const GroupIndex::RankGuard guard{config.max_rank};
  const GroupIndex idx = GroupIndex::whole_group(config.n, guard);
  const MatrixRep pn = permutation_p(config.n);
  CommandResult result;
  result.trials.resize(static_cast<std::size_t>(config.trials));
  std::vector<double> deviations(static_cast<std::size_t>(config.trials), 0.0);
  parallel_for(config.trials, config.workers, [&](int i) {
    const auto start = clock_type::now();
    const std::uint64_t trial_seed = config.seed + static_cast<std::uint64_t>(i);
    const ClassAWeights caw = random_class_a(config.n, config.density, trial_seed);
    const WeightedElement w = caw.expand();
    const GapReport regular = cayley_gap(w, idx);
    const GapReport projected = spectral_gap(w, pn, idx);
    const double deviation = std::abs(regular.value() - projected.value());
    const double scale = std::max(regular.spectrum.scale(), projected.spectrum.scale());
    const bool pass = deviation <= config.tol * scale;
    deviations[static_cast<std::size_t>(i)] = deviation;
    ordered_json rec;
    rec["trial"] = i;
    rec["seed"] = trial_seed;
    rec["digest"] = weight_digest(caw);
    rec["gap_regular"] = regular.value();
    rec["gap_pn"] = projected.value();
    rec["deviation"] = deviation;
    rec["scale"] = scale;
    rec["pass"] = pass;
    rec["wall_ms"] = ms_since(start);
    result.trials[static_cast<std::size_t>(i)] = std::move(rec);
  });
  result.max_deviation = *std::max_element(deviations.begin(), deviations.end());
  return result;
}

CommandResult cmd_verify_aldous(const RunConfig& config) {
  require(config.n >= 2, "verify-aldous: n must be >= 2");
  const GroupIndex::RankGuard guard{config.max_rank};
  const GroupIndex idx = GroupIndex::symmetric_subgroup(config.n, guard);
  const MatrixRep d0 = defining_s(config.n);
  CommandResult result;
  result.trials.resize(static_cast<std::size_t>(config.trials));
  std::vector<double> deviations(static_cast<std::size_t>(config.trials), 0.0);
  parallel_for(config.trials, config.workers, [&](int i) {
    const auto start = clock_type::now();
    const std::uint64_t trial_seed = config.seed + static_cast<std::uint64_t>(i);
    const ClassAWeights caw = random_transpositions(config.n, config.density, trial_seed);
    const WeightedElement w = caw.expand();
    const GapReport regular = cayley_gap(w, idx);
    const GapReport defining = spectral_gap(w, d0, idx);
    const double deviation = std::abs(regular.value() - defining.value());
    const double scale = std::max(regular.spectrum.scale(), defining.spectrum.scale());
    const bool pass = deviation <= config.tol * scale;
    deviations[static_cast<std::size_t>(i)] = deviation;
    ordered_json rec;
    rec["trial"] = i;
    rec["seed"] = trial_seed;
    rec["digest"] = weight_digest(caw);
    rec["gap_regular"] = regular.value();
    rec["gap_d0n"] = defining.value();
    rec["deviation"] = deviation;
    rec["scale"] = scale;
    rec["pass"] = pass;
    rec["wall_ms"] = ms_since(start);
    result.trials[static_cast<std::size_t>(i)] = std::move(rec);
  });
  result.max_deviation = *std::max_element(deviations.begin(), deviations.end());
  return result;
}

CommandResult cmd_octopus(const RunConfig& config) {
  const GroupIndex::RankGuard guard{config.max_rank};
  const GroupIndex idx = GroupIndex::whole_group(config.n, guard);
  CommandResult result;
  result.trials.resize(static_cast<std::size_t>(config.trials));
  parallel_for(config.trials, config.workers, [&](int i) {
    const auto start = clock_type::now();
    const std::uint64_t trial_seed = config.seed + static_cast<std::uint64_t>(i);
    const ClassAWeights caw = random_class_a(config.n, config.density, trial_seed);
    const bool psd = octopus_check(caw, idx, config.tol);
    const bool rank_one =
        config.n >= 2 ? rank_one_identity_check(caw, 1e-12, config.tol) : true;
    ordered_json rec;
    rec["trial"] = i;
    rec["seed"] = trial_seed;
    rec["digest"] = weight_digest(caw);
    rec["cone_membership"] = psd;
    rec["rank_one_identity"] = rank_one;
    rec["pass"] = psd && rank_one;
    rec["wall_ms"] = ms_since(start);
    result.trials[static_cast<std::size_t>(i)] = std::move(rec);
  });
  return result;
}

CommandResult cmd_counterexample(const RunConfig& config) {
  require(config.weights_file.empty(),
          "counterexample uses the canonical family weights; --weights is not supported");
  const GroupIndex::RankGuard guard{config.max_rank};
  const GroupIndex idx = GroupIndex::whole_group(config.n, guard);
  const auto start = clock_type::now();
  const CounterexampleFamily family = parse_family(config.family);
  const CounterexampleSpec spec =
      CounterexampleSpec::canonical(family, config.n, config.epsilon);
  const CounterexampleReport report = counterexample(spec, idx, config.tol);
  ordered_json rec;
  rec["trial"] = 0;
  rec["family"] = family_name(report.family);
  rec["epsilon"] = report.epsilon;
  rec["gap_regular"] = report.gap_regular;
  rec["gap_pn"] = report.gap_pn;
  rec["gap_dn"] = report.gap_dn;
  rec["gap_d0n"] = report.gap_d0n;
  rec["gap_jn"] = report.gap_jn;
  rec["margin"] = report.margin;
  rec["orderings_hold"] = report.orderings_hold;
  rec["theorem_equality"] = report.theorem_equality;
  rec["pass"] = report.passed;
  rec["wall_ms"] = ms_since(start);
  CommandResult result;
  result.trials.push_back(std::move(rec));
  result.max_deviation = std::abs(report.gap_regular - report.gap_pn);
  return result;
}

CommandResult cmd_decompose(const RunConfig& config) {
  const GroupIndex::RankGuard guard{config.max_rank};
  const GroupIndex idx = GroupIndex::whole_group(config.n, guard);
  const MatrixRep lifted = lifted_defining_s(config.n);
  const MatrixRep defining = defining_w(config.n);
  std::vector<std::size_t> picks;
  if (config.n <= 3) {
    picks.resize(idx.order());
    for (std::size_t i = 0; i < idx.order(); ++i) picks[i] = i;
  } else {
    std::mt19937_64 rng(config.seed);
    picks.resize(static_cast<std::size_t>(config.trials));
    for (auto& p : picks) p = static_cast<std::size_t>(rng() % idx.order());
  }
  CommandResult result;
  result.trials.resize(picks.size());
  std::vector<double> deviations(picks.size(), 0.0);
  parallel_for(static_cast<int>(picks.size()), config.workers, [&](int i) {
    const auto start = clock_type::now();
    const SignedPermutation& g = idx.element(picks[static_cast<std::size_t>(i)]);
    const PnBlocks blocks = pn_blocks(config.n, g);
    const double direct = std::max(
        (blocks.plus - lifted.eval(g)).cwiseAbs().maxCoeff(),
        (blocks.minus - defining.eval(g)).cwiseAbs().maxCoeff());
    const double worst = std::max(blocks.off_block_max, direct);
    deviations[static_cast<std::size_t>(i)] = worst;
    ordered_json rec;
    rec["trial"] = i;
    rec["element"] = g.to_string();
    rec["off_block_max"] = blocks.off_block_max;
    rec["direct_deviation"] = direct;
    rec["pass"] = worst <= 1e-12;
    rec["wall_ms"] = ms_since(start);
    result.trials[static_cast<std::size_t>(i)] = std::move(rec);
  });
  result.max_deviation = *std::max_element(deviations.begin(), deviations.end());
  return result;
}

}  // namespace

nlohmann::ordered_json run_command(const RunConfig& config) {
  require(config.n >= 1, "n must be >= 1");
  require(config.trials >= 1, "trials must be >= 1");
  require(config.tol > 0.0, "tol must be > 0");
  require(config.density >= 0.0 && config.density <= 1.0, "density must lie in [0, 1]");
  require(config.workers >= 1, "workers must be >= 1");
  require(config.max_rank >= 1, "rank guard must be >= 1");
  require(config.output == "json" || config.output == "csv",
          "output must be json or csv");
  static const char* kReps[] = {"regular", "pn", "dn", "d0n", "jn"};
  require(std::find(std::begin(kReps), std::end(kReps), config.rep) != std::end(kReps),
          "rep must be one of regular|pn|dn|d0n|jn");
  require(config.family == "a" || config.family == "b" || config.family == "c",
          "family must be a, b, or c");

  const auto start = clock_type::now();
  int effective_n = config.n;
  CommandResult result;
  if (config.command == "gap") {
    std::vector<ClassAWeights> weights;
    if (!config.weights_file.empty()) {
      weights.push_back(class_a_from_json(read_file(config.weights_file)));
      effective_n = weights.front().rank();
    } else {
      weights.reserve(static_cast<std::size_t>(config.trials));
      for (int i = 0; i < config.trials; ++i) {
        weights.push_back(random_class_a(config.n, config.density,
                                         config.seed + static_cast<std::uint64_t>(i)));
      }
    }
    result = cmd_gap(config, effective_n, weights);
  } else if (config.command == "verify-main") {
    result = cmd_verify_main(config);
  } else if (config.command == "verify-aldous") {
    result = cmd_verify_aldous(config);
  } else if (config.command == "octopus") {
    result = cmd_octopus(config);
  } else if (config.command == "counterexample") {
    result = cmd_counterexample(config);
  } else if (config.command == "decompose") {
    result = cmd_decompose(config);
  } else {
    throw std::invalid_argument("unknown command: " + config.command);
  }

  int passed = 0;
  for (const auto& rec : result.trials) {
    if (rec.at("pass").get<bool>()) ++passed;
  }
  const int total = static_cast<int>(result.trials.size());

  ordered_json report;
  report["command"] = config.command;
  ordered_json cfg;
  cfg["n"] = effective_n;
  cfg["trials"] = config.trials;
  cfg["seed"] = config.seed;
  cfg["density"] = config.density;
  cfg["tol"] = config.tol;
  cfg["epsilon"] = config.epsilon;
  cfg["rep"] = config.rep;
  cfg["weights"] = config.weights_file.empty() ? ordered_json(nullptr)
                                               : ordered_json(config.weights_file);
  cfg["family"] = config.family;
  cfg["output"] = config.output;
  cfg["max_rank"] = config.max_rank;
  cfg["workers"] = config.workers;
  report["config"] = std::move(cfg);
  report["trials"] = ordered_json::array();
  for (auto& rec : result.trials) report["trials"].push_back(std::move(rec));
  ordered_json summary;
  summary["trials"] = total;
  summary["passed"] = passed;
  summary["failed"] = total - passed;
  summary["all_passed"] = (passed == total);
  summary["max_deviation"] = result.max_deviation;
  summary["wall_ms"] = ms_since(start);
  report["summary"] = std::move(summary);
  return report;
}

int report_exit_code(const nlohmann::ordered_json& report) {
  return report.at("summary").at("all_passed").get<bool>() ? 0 : 1;
}

namespace {

std::string csv_escape(const nlohmann::ordered_json& value) {
  std::string raw;
  if (value.is_string()) {
    raw = value.get<std::string>();
  } else if (value.is_null()) {
    raw = "";
  } else {
    raw = value.dump();
  }
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string report_to_csv(const nlohmann::ordered_json& report) {
  std::ostringstream out;
  const auto& trials = report.at("trials");
  if (!trials.empty()) {
    bool first = true;
    for (const auto& [key, value] : trials.front().items()) {
      (void)value;
      out << (first ? "" : ",") << key;
      first = false;
    }
    out << "\n";
    for (const auto& rec : trials) {
      first = true;
      for (const auto& [key, value] : trials.front().items()) {
        (void)value;
        const nlohmann::ordered_json cell =
            rec.contains(key) ? rec.at(key) : nlohmann::ordered_json(nullptr);
        out << (first ? "" : ",") << csv_escape(cell);
        first = false;
      }
      out << "\n";
    }
  }
  for (const auto& [key, value] : report.at("summary").items()) {
    out << "# " << key << "=" << value.dump() << "\n";
  }
  return out.str();
}

}  // namespace hyperoct
