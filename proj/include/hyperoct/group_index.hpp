#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

/// A materialized, indexed enumeration of either the full group B_n
/// (order 2^n · n!) or its symmetric subgroup S_n (order n!).
///
/// The element at index i is determined arithmetically:
///   index = mask · n! + lex_rank(pi)
/// where mask runs in binary counting order (eta_1 = bit 0) and lex_rank
/// is the lexicographic rank of pi in one-line notation. The symmetric
/// sector uses mask = 0 only, so its indices coincide with the first n!
/// indices of the full enumeration.
///
/// Copies are cheap (shared immutable state).
class GroupIndex {
 public:
  /// Guard against accidental huge enumerations. Construction throws
  /// std::invalid_argument when n exceeds max_rank. Callers may raise the
  /// limit deliberately, but never beyond the hard cap of 8.
  struct RankGuard {
    int max_rank;
    constexpr RankGuard() : max_rank(5) {}
    constexpr explicit RankGuard(int m) : max_rank(m) {}
  };

  static GroupIndex whole_group(int n, RankGuard guard = RankGuard());
  static GroupIndex symmetric_subgroup(int n, RankGuard guard = RankGuard());

  int rank() const;
  std::size_t order() const;
  bool symmetric_sector_only() const;

  const SignedPermutation& element(std::size_t i) const;
  const std::vector<SignedPermutation>& elements() const;

  /// Index of g in this enumeration, computed arithmetically. Throws
  /// std::invalid_argument if g has the wrong rank or (for the symmetric
  /// sector) carries a nonzero sign bit.
  std::size_t index_of(const SignedPermutation& g) const;

 private:
  struct Data;
  explicit GroupIndex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<const Data> build(int n, bool sector, RankGuard guard);
  std::shared_ptr<const Data> data_;
};

/// Convenience alias for GroupIndex::whole_group.
GroupIndex enumerate_group(int n, GroupIndex::RankGuard guard = GroupIndex::RankGuard());

}  // namespace hyperoct
