#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperoct/weighted_element.hpp"

namespace hyperoct {

/// Sign-flip weights keyed by subset mask (bit i-1 set ⟺ letter i in the
/// set); transposition weights keyed by the ordered pair (i, j) with i < j.
using SignWeightMap = std::map<std::uint32_t, double>;
using PairWeightMap = std::map<std::pair<int, int>, double>;

std::uint32_t set_to_mask(int n, const std::vector<int>& set);
std::vector<int> mask_to_set(std::uint32_t mask);

/// Nonnegative weights on the standard generating family of B_n: sign
/// flips s_A over subsets A of odd cardinality, and transpositions (i j).
/// Exact-zero weights are never stored, so the key sets are the support.
class ClassAWeights {
 public:
  explicit ClassAWeights(int n);

  int rank() const { return n_; }

  /// Sets the weight of s_A. A must be a nonempty set of distinct indices
  /// in {1..n} of odd cardinality; the weight must be >= 0 (an exact zero
  /// erases the entry). Throws std::invalid_argument otherwise.
  void set_sign_weight(const std::vector<int>& set, double a);
  double sign_weight(const std::vector<int>& set) const;

  /// Sets the weight of the transposition (i j), i != j; weight >= 0.
  void set_transposition_weight(int i, int j, double b);
  double transposition_weight(int i, int j) const;

  const SignWeightMap& sign_weights() const { return signs_; }
  const PairWeightMap& transposition_weights() const { return trans_; }
  bool empty() const { return signs_.empty() && trans_.empty(); }

  /// The formal sum Σ_A a_A s_A + Σ b_ij (i j) as a group-algebra element.
  WeightedElement expand() const;
  /// The sign-flip part Σ_A a_A s_A alone.
  WeightedElement sign_part() const;
  /// The transposition part Σ b_ij (i j) alone.
  WeightedElement transposition_part() const;

  /// â_i = Σ_{A ∋ i} a_A for i = 1..n (returned 0-based: result[i-1]).
  /// Each entry is accumulated over subsets in ascending mask order, so
  /// ties between symmetric inputs reproduce exactly in floating point.
  std::vector<double> a_hat() const;

  /// The largest index ℓ attaining min_i â_i (exact comparison on the
  /// computed â values).
  int select_ell() const;

  /// True iff the graph on {1..n} with an edge per stored transposition
  /// weight is connected.
  bool transposition_graph_connected() const;

 private:
  int n_;
  SignWeightMap signs_;
  PairWeightMap trans_;
};

/// Independently includes each odd subset and each pair with probability
/// `density`, weight uniform in (0, 1]. Deterministic for a fixed seed:
/// subsets are visited in ascending mask order, then pairs in
/// lexicographic order, with one inclusion draw each and a weight draw
/// only for included entries.
ClassAWeights random_class_a(int n, double density, std::uint64_t seed);

/// Same stream discipline as random_class_a but over pairs only
/// (transposition-only weights, e.g. for symmetric-subgroup sweeps).
ClassAWeights random_transpositions(int n, double density, std::uint64_t seed);

/// Parses the JSON weight-file schema:
///   {"n": 3,
///    "sign_flips": [{"set": [1,2,3], "weight": 1.0}, ...],
///    "transpositions": [{"i": 1, "j": 2, "weight": 2.0}, ...]}
/// Sets are 1-based strictly increasing lists of odd cardinality.
/// Duplicate sets/pairs, negative weights, malformed fields, and unknown
/// keys raise std::invalid_argument naming the offending field.
ClassAWeights class_a_from_json(const std::string& text);

/// Serializes back to the schema above (entries in canonical order).
std::string class_a_to_json(const ClassAWeights& caw);

/// Order-independent 64-bit content digest (16 hex digits) over the
/// canonicalized (set, weight) and (pair, weight) lists.
std::string weight_digest(const ClassAWeights& caw);

}  // namespace hyperoct
