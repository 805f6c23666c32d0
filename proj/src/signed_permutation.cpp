#include "hyperoct/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperoct {

namespace {

void check_rank(int n) {
  if (n < 1 || n > 32) {
    throw std::invalid_argument("rank must be in [1, 32], got " + std::to_string(n));
  }
}

std::vector<int> inverse_one_line(const std::vector<int>& pi) {
  std::vector<int> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    inv[static_cast<std::size_t>(pi[i]) - 1] = static_cast<int>(i) + 1;
  }
  return inv;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<std::uint8_t> eta, std::vector<int> pi)
    : eta_(std::move(eta)), pi_(std::move(pi)) {
  check_rank(static_cast<int>(pi_.size()));
  if (eta_.size() != pi_.size()) {
    throw std::invalid_argument("eta and pi must have the same length");
  }
  std::vector<bool> seen(pi_.size(), false);
  for (int v : pi_) {
    if (v < 1 || v > static_cast<int>(pi_.size()) || seen[static_cast<std::size_t>(v) - 1]) {
      throw std::invalid_argument("pi is not a permutation of {1..n}");
    }
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
  for (std::uint8_t b : eta_) {
    if (b > 1) throw std::invalid_argument("eta entries must be 0 or 1");
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  check_rank(n);
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  return SignedPermutation(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0),
                           std::move(pi));
}

SignedPermutation SignedPermutation::sign_flip(int n, const std::vector<int>& a) {
  SignedPermutation g = identity(n);
  for (int i : a) {
    if (i < 1 || i > n) throw std::invalid_argument("sign_flip: index out of range");
    if (g.eta_[static_cast<std::size_t>(i) - 1]) {
      throw std::invalid_argument("sign_flip: repeated index");
    }
    g.eta_[static_cast<std::size_t>(i) - 1] = 1;
  }
  return g;
}

SignedPermutation SignedPermutation::transposition(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw std::invalid_argument("transposition: need distinct i, j in {1..n}");
  }
  SignedPermutation g = identity(n);
  std::swap(g.pi_[static_cast<std::size_t>(i) - 1], g.pi_[static_cast<std::size_t>(j) - 1]);
  return g;
}

bool SignedPermutation::is_identity() const {
  if (!is_unsigned()) return false;
  for (std::size_t i = 0; i < pi_.size(); ++i) {
    if (pi_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool SignedPermutation::is_unsigned() const {
  return std::all_of(eta_.begin(), eta_.end(), [](std::uint8_t b) { return b == 0; });
}

std::uint32_t SignedPermutation::eta_mask() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < eta_.size(); ++i) {
    m |= static_cast<std::uint32_t>(eta_[i]) << i;
  }
  return m;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream out;
  out << "([";
  for (std::size_t i = 0; i < eta_.size(); ++i) {
    out << (i ? " " : "") << static_cast<int>(eta_[i]);
  }
  out << "], [";
  for (std::size_t i = 0; i < pi_.size(); ++i) {
    out << (i ? " " : "") << pi_[i];
  }
  out << "])";
  return out.str();
}

bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.pi_.size() != b.pi_.size()) return a.pi_.size() < b.pi_.size();
  if (a.pi_ != b.pi_) return a.pi_ < b.pi_;
  return a.eta_mask() < b.eta_mask();
}

SignedPermutation multiply(const SignedPermutation& g, const SignedPermutation& h) {
  if (g.rank() != h.rank()) {
    throw std::invalid_argument("multiply: rank mismatch");
  }
  const std::size_t n = static_cast<std::size_t>(g.rank());
  const std::vector<int> pinv = inverse_one_line(g.pi());
  std::vector<std::uint8_t> eta(n);
  std::vector<int> pi(n);
  for (std::size_t j = 0; j < n; ++j) {
    eta[j] = static_cast<std::uint8_t>(
        (g.eta()[j] + h.eta()[static_cast<std::size_t>(pinv[j]) - 1]) & 1);
    pi[j] = g.pi()[static_cast<std::size_t>(h.pi()[j]) - 1];
  }
  return SignedPermutation(std::move(eta), std::move(pi));
}

SignedPermutation inverse(const SignedPermutation& g) {
  const std::size_t n = static_cast<std::size_t>(g.rank());
  std::vector<int> pinv = inverse_one_line(g.pi());
  std::vector<std::uint8_t> eta(n);
  for (std::size_t i = 0; i < n; ++i) {
    eta[i] = g.eta()[static_cast<std::size_t>(g.pi()[i]) - 1];
  }
  return SignedPermutation(std::move(eta), std::move(pinv));
}

int act(const SignedPermutation& g, int k) {
  const int n = g.rank();
  if (k == 0 || std::abs(k) > n) {
    throw std::out_of_range("act: point must lie in {-n..-1, 1..n}");
  }
  const int image = g.image(std::abs(k));
  const int sign = (g.sign_bit(image) ? -1 : 1) * (k < 0 ? -1 : 1);
  return sign * image;
}

SignedPermutation embed(const SignedPermutation& g, int drop) {
  const int n = g.rank() + 1;
  if (drop < 1 || drop > n) {
    throw std::invalid_argument("embed: drop must lie in {1..n}");
  }
  // letters[r-1] is the letter of {1..n} carrying rank-(n-1) position r.
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n) - 1);
  for (int v = 1; v <= n; ++v) {
    if (v != drop) letters.push_back(v);
  }
  std::vector<std::uint8_t> eta(static_cast<std::size_t>(n), 0);
  std::vector<int> pi(static_cast<std::size_t>(n), 0);
  pi[static_cast<std::size_t>(drop) - 1] = drop;
  for (int r = 1; r < n; ++r) {
    const int from = letters[static_cast<std::size_t>(r) - 1];
    const int to = letters[static_cast<std::size_t>(g.image(r)) - 1];
    pi[static_cast<std::size_t>(from) - 1] = to;
    eta[static_cast<std::size_t>(to) - 1] = static_cast<std::uint8_t>(g.sign_bit(g.image(r)));
  }
  return SignedPermutation(std::move(eta), std::move(pi));
}

}  // namespace hyperoct
