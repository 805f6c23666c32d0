#include "hyperoct/class_a.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hyperoct {

namespace {

void check_index(int n, int i, const char* what) {
  if (i < 1 || i > n) {
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(n));
  }
}

std::pair<int, int> canonical_pair(int n, int i, int j, const char* what) {
  check_index(n, i, what);
  check_index(n, j, what);
  if (i == j) {
    throw std::invalid_argument(std::string(what) + ": pair indices must differ");
  }
  return {std::min(i, j), std::max(i, j)};
}

double unit_open_closed(std::mt19937_64& rng) {
  // Uniform in (0, 1]: 1 − u with u uniform in [0, 1) on a 53-bit grid.
  return 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double unit_closed_open(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint32_t set_to_mask(int n, const std::vector<int>& set) {
  std::uint32_t mask = 0;
  for (int i : set) {
    check_index(n, i, "subset");
    const std::uint32_t bit = std::uint32_t{1} << (i - 1);
    if (mask & bit) throw std::invalid_argument("subset: repeated index");
    mask |= bit;
  }
  return mask;
}

std::vector<int> mask_to_set(std::uint32_t mask) {
  std::vector<int> set;
  for (int i = 1; mask; ++i, mask >>= 1) {
    if (mask & 1u) set.push_back(i);
  }
  return set;
}

ClassAWeights::ClassAWeights(int n) : n_(n) {
  if (n < 1 || n > 32) throw std::invalid_argument("ClassAWeights: rank must be in [1, 32]");
}

void ClassAWeights::set_sign_weight(const std::vector<int>& set, double a) {
  const std::uint32_t mask = set_to_mask(n_, set);
  if (mask == 0) throw std::invalid_argument("sign weight: set must be nonempty");
  if (std::popcount(mask) % 2 == 0) {
    throw std::invalid_argument("sign weight: set must have odd cardinality");
  }
  if (!(a >= 0.0)) throw std::invalid_argument("sign weight: weight must be >= 0");
  if (a == 0.0) {
    signs_.erase(mask);
  } else {
    signs_[mask] = a;
  }
}

double ClassAWeights::sign_weight(const std::vector<int>& set) const {
  auto it = signs_.find(set_to_mask(n_, set));
  return it == signs_.end() ? 0.0 : it->second;
}

void ClassAWeights::set_transposition_weight(int i, int j, double b) {
  const auto key = canonical_pair(n_, i, j, "transposition weight");
  if (!(b >= 0.0)) throw std::invalid_argument("transposition weight: weight must be >= 0");
  if (b == 0.0) {
    trans_.erase(key);
  } else {
    trans_[key] = b;
  }
}

double ClassAWeights::transposition_weight(int i, int j) const {
  auto it = trans_.find(canonical_pair(n_, i, j, "transposition weight"));
  return it == trans_.end() ? 0.0 : it->second;
}

WeightedElement ClassAWeights::expand() const {
  WeightedElement w = sign_part();
  w += transposition_part();
  return w;
}

WeightedElement ClassAWeights::sign_part() const {
  WeightedElement w(n_);
  for (const auto& [mask, a] : signs_) {
    w.add(SignedPermutation::sign_flip(n_, mask_to_set(mask)), a);
  }
  return w;
}

WeightedElement ClassAWeights::transposition_part() const {
  WeightedElement w(n_);
  for (const auto& [pair, b] : trans_) {
    w.add(SignedPermutation::transposition(n_, pair.first, pair.second), b);
  }
  return w;
}

std::vector<double> ClassAWeights::a_hat() const {
  std::vector<double> hat(static_cast<std::size_t>(n_), 0.0);
  for (const auto& [mask, a] : signs_) {
    for (int i = 0; i < n_; ++i) {
      if (mask & (std::uint32_t{1} << i)) hat[static_cast<std::size_t>(i)] += a;
    }
  }
  return hat;
}

int ClassAWeights::select_ell() const {
  const std::vector<double> hat = a_hat();
  const double lo = *std::min_element(hat.begin(), hat.end());
  int ell = 1;
  for (int i = 1; i <= n_; ++i) {
    if (hat[static_cast<std::size_t>(i) - 1] == lo) ell = i;
  }
  return ell;
}

bool ClassAWeights::transposition_graph_connected() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_) + 1);
  for (const auto& [pair, b] : trans_) {
    (void)b;
    adj[static_cast<std::size_t>(pair.first)].push_back(pair.second);
    adj[static_cast<std::size_t>(pair.second)].push_back(pair.first);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  std::queue<int> frontier;
  frontier.push(1);
  seen[1] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == n_;
}

ClassAWeights random_class_a(int n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random_class_a: density must lie in [0, 1]");
  }
  ClassAWeights caw(n);
  std::mt19937_64 rng(seed);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    if (unit_closed_open(rng) < density) {
      caw.set_sign_weight(mask_to_set(mask), unit_open_closed(rng));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (unit_closed_open(rng) < density) {
        caw.set_transposition_weight(i, j, unit_open_closed(rng));
      }
    }
  }
  return caw;
}

ClassAWeights random_transpositions(int n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random_transpositions: density must lie in [0, 1]");
  }
  ClassAWeights caw(n);
  std::mt19937_64 rng(seed);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (unit_closed_open(rng) < density) {
        caw.set_transposition_weight(i, j, unit_open_closed(rng));
      }
    }
  }
  return caw;
}

namespace {

using nlohmann::json;

[[noreturn]] void fail_field(const std::string& where, const std::string& why) {
  throw std::invalid_argument("weights JSON: " + where + ": " + why);
}

double read_weight(const json& entry, const std::string& where) {
  if (!entry.contains("weight")) fail_field(where, "missing \"weight\"");
  const json& w = entry.at("weight");
  if (!w.is_number()) fail_field(where, "\"weight\" must be a number");
  const double v = w.get<double>();
  if (v < 0.0) fail_field(where, "\"weight\" must be >= 0");
  return v;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; }) == allowed.end()) {
      fail_field(where, "unknown key \"" + key + "\"");
    }
  }
}

}  // namespace

ClassAWeights class_a_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("weights JSON: parse error: ") + e.what());
  }
  if (!doc.is_object()) fail_field("top level", "must be an object");
  check_keys(doc, {"n", "sign_flips", "transpositions"}, "top level");
  if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
    fail_field("top level", "\"n\" must be an integer");
  }
  const int n = doc.at("n").get<int>();
  if (n < 1 || n > 32) fail_field("\"n\"", "must lie in [1, 32]");
  ClassAWeights caw(n);

  if (doc.contains("sign_flips")) {
    const json& flips = doc.at("sign_flips");
    if (!flips.is_array()) fail_field("\"sign_flips\"", "must be an array");
    std::size_t k = 0;
    for (const json& entry : flips) {
      const std::string where = "sign_flips[" + std::to_string(k++) + "]";
      if (!entry.is_object()) fail_field(where, "must be an object");
      check_keys(entry, {"set", "weight"}, where);
      if (!entry.contains("set") || !entry.at("set").is_array()) {
        fail_field(where, "\"set\" must be an array of indices");
      }
      std::vector<int> set;
      int prev = 0;
      for (const json& v : entry.at("set")) {
        if (!v.is_number_integer()) fail_field(where, "\"set\" entries must be integers");
        const int i = v.get<int>();
        if (i <= prev) fail_field(where, "\"set\" must be strictly increasing and 1-based");
        if (i > n) fail_field(where, "\"set\" index exceeds n");
        set.push_back(i);
        prev = i;
      }
      if (set.empty()) fail_field(where, "\"set\" must be nonempty");
      if (set.size() % 2 == 0) fail_field(where, "\"set\" must have odd cardinality");
      if (caw.sign_weight(set) != 0.0) fail_field(where, "duplicate set");
      caw.set_sign_weight(set, read_weight(entry, where));
    }
  }

  if (doc.contains("transpositions")) {
    const json& trans = doc.at("transpositions");
    if (!trans.is_array()) fail_field("\"transpositions\"", "must be an array");
    std::size_t k = 0;
    for (const json& entry : trans) {
      const std::string where = "transpositions[" + std::to_string(k++) + "]";
      if (!entry.is_object()) fail_field(where, "must be an object");
      check_keys(entry, {"i", "j", "weight"}, where);
      for (const char* key : {"i", "j"}) {
        if (!entry.contains(key) || !entry.at(key).is_number_integer()) {
          fail_field(where, std::string("\"") + key + "\" must be an integer");
        }
      }
      const int i = entry.at("i").get<int>();
      const int j = entry.at("j").get<int>();
      if (i < 1 || i > n || j < 1 || j > n) fail_field(where, "indices must lie in 1..n");
      if (i == j) fail_field(where, "indices must differ");
      if (caw.transposition_weight(i, j) != 0.0) fail_field(where, "duplicate pair");
      caw.set_transposition_weight(i, j, read_weight(entry, where));
    }
  }
  return caw;
}

std::string class_a_to_json(const ClassAWeights& caw) {
  nlohmann::ordered_json doc;
  doc["n"] = caw.rank();
  doc["sign_flips"] = json::array();
  for (const auto& [mask, a] : caw.sign_weights()) {
    nlohmann::ordered_json entry;
    entry["set"] = mask_to_set(mask);
    entry["weight"] = a;
    doc["sign_flips"].push_back(std::move(entry));
  }
  doc["transpositions"] = json::array();
  for (const auto& [pair, b] : caw.transposition_weights()) {
    nlohmann::ordered_json entry;
    entry["i"] = pair.first;
    entry["j"] = pair.second;
    entry["weight"] = b;
    doc["transpositions"].push_back(std::move(entry));
  }
  return doc.dump(2);
}

std::string weight_digest(const ClassAWeights& caw) {
  std::ostringstream canon;
  canon << "n=" << caw.rank() << ";";
  for (const auto& [mask, a] : caw.sign_weights()) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(a));
    std::memcpy(&bits, &a, sizeof(bits));
    canon << "s" << mask << ":" << std::hex << bits << std::dec << ";";
  }
  for (const auto& [pair, b] : caw.transposition_weights()) {
    std::uint64_t bits;
    std::memcpy(&bits, &b, sizeof(bits));
    canon << "t" << pair.first << "," << pair.second << ":" << std::hex << bits
          << std::dec << ";";
  }
  // FNV-1a, 64-bit.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canon.str()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace hyperoct
