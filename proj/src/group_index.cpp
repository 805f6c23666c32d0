#include "hyperoct/group_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperoct {

namespace {

constexpr int kHardRankCap = 8;

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

/// Lexicographic rank of a one-line permutation of {1..n} (Lehmer code).
std::size_t lex_rank(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (pi[static_cast<std::size_t>(j)] < pi[static_cast<std::size_t>(i)]) ++smaller;
    }
    rank += static_cast<std::size_t>(smaller) * factorial(n - 1 - i);
  }
  return rank;
}

}  // namespace

struct GroupIndex::Data {
  int rank = 0;
  bool sector = false;
  std::vector<SignedPermutation> elements;
};

std::shared_ptr<const GroupIndex::Data> GroupIndex::build(int n, bool sector,
                                                          RankGuard guard) {
  if (guard.max_rank > kHardRankCap) guard.max_rank = kHardRankCap;
  if (n < 1) throw std::invalid_argument("enumeration: rank must be >= 1");
  if (n > guard.max_rank) {
    throw std::invalid_argument(
        "enumeration: rank " + std::to_string(n) + " exceeds the guard limit " +
        std::to_string(guard.max_rank) +
        " (raise the limit explicitly to enumerate larger groups)");
  }
  auto data = std::make_shared<GroupIndex::Data>();
  data->rank = n;
  data->sector = sector;
  const std::size_t nfact = factorial(n);
  const std::size_t masks = sector ? 1 : (std::size_t{1} << n);
  data->elements.reserve(masks * nfact);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    std::vector<std::uint8_t> eta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      eta[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((mask >> i) & 1u);
    }
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    do {
      data->elements.emplace_back(eta, pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
  return data;
}

GroupIndex GroupIndex::whole_group(int n, RankGuard guard) {
  return GroupIndex(build(n, /*sector=*/false, guard));
}

GroupIndex GroupIndex::symmetric_subgroup(int n, RankGuard guard) {
  return GroupIndex(build(n, /*sector=*/true, guard));
}

int GroupIndex::rank() const { return data_->rank; }

std::size_t GroupIndex::order() const { return data_->elements.size(); }

bool GroupIndex::symmetric_sector_only() const { return data_->sector; }

const SignedPermutation& GroupIndex::element(std::size_t i) const {
  return data_->elements.at(i);
}

const std::vector<SignedPermutation>& GroupIndex::elements() const {
  return data_->elements;
}

std::size_t GroupIndex::index_of(const SignedPermutation& g) const {
  if (g.rank() != data_->rank) {
    throw std::invalid_argument("index_of: rank mismatch");
  }
  if (data_->sector && !g.is_unsigned()) {
    throw std::invalid_argument("index_of: element lies outside the symmetric sector");
  }
  const std::size_t idx =
      static_cast<std::size_t>(g.eta_mask()) * factorial(data_->rank) + lex_rank(g.pi());
  return idx;
}

GroupIndex enumerate_group(int n, GroupIndex::RankGuard guard) {
  return GroupIndex::whole_group(n, guard);
}

}  // namespace hyperoct
