#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperoct {

/// An element of the hyperoctahedral group B_n, stored as a pair (eta, pi):
///   * pi  — a permutation of {1..n} in one-line notation (pi[i-1] = pi(i)),
///   * eta — a vector of sign bits in {0,1}, eta[i-1] = eta_i.
///
/// Composition follows the "flip after permute" convention:
///   (eta, pi) * (zeta, sigma) = (eta + zeta∘pi⁻¹ mod 2, pi∘sigma),
/// which makes the natural action on {-n..-1, 1..n} (see act()) a left
/// action: (g*h)·k = g·(h·k).
///
/// Elements compare first by rank, then by pi lexicographically, then by
/// the sign mask (eta_1 = least significant bit). Under this order, for a
/// fixed pi the elements enumerate in binary counting order of the mask.
class SignedPermutation {
 public:
  /// Validates: pi is a permutation of {1..n}, eta has matching length and
  /// entries in {0,1}. Throws std::invalid_argument otherwise.
  SignedPermutation(std::vector<std::uint8_t> eta, std::vector<int> pi);

  /// The identity of B_n (all sign bits 0, pi = id).
  static SignedPermutation identity(int n);

  /// The sign-flip s_A in B_n: eta_i = 1 exactly for i in A, pi = id.
  /// A must contain distinct indices in {1..n} (it may be empty).
  static SignedPermutation sign_flip(int n, const std::vector<int>& a);

  /// The unsigned transposition (i j) in B_n, i != j.
  static SignedPermutation transposition(int n, int i, int j);

  int rank() const { return static_cast<int>(pi_.size()); }

  /// pi(i) for 1 <= i <= n.
  int image(int i) const { return pi_[static_cast<std::size_t>(i) - 1]; }

  /// eta_i in {0,1} for 1 <= i <= n.
  int sign_bit(int i) const { return eta_[static_cast<std::size_t>(i) - 1]; }

  const std::vector<std::uint8_t>& eta() const { return eta_; }
  const std::vector<int>& pi() const { return pi_; }

  bool is_identity() const;

  /// True when every sign bit is 0, i.e. the element lies in the
  /// symmetric subgroup S_n ⊂ B_n.
  bool is_unsigned() const;

  /// Sign bits packed into a mask with eta_1 as bit 0. Requires rank <= 32.
  std::uint32_t eta_mask() const;

  /// Diagnostic form, e.g. "([1 0], [2 1])".
  std::string to_string() const;

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.pi_ == b.pi_ && a.eta_ == b.eta_;
  }
  friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
    return !(a == b);
  }
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b);

 private:
  std::vector<std::uint8_t> eta_;
  std::vector<int> pi_;
};

/// Group law: (eta, pi) * (zeta, sigma) with
///   result pi(k)  = pi(sigma(k)),
///   result eta_j  = eta_j + zeta_{pi⁻¹(j)}  (mod 2).
SignedPermutation multiply(const SignedPermutation& g, const SignedPermutation& h);

/// Inverse: (eta, pi)⁻¹ = (eta∘pi, pi⁻¹).
SignedPermutation inverse(const SignedPermutation& g);

/// The action of g = (eta, pi) on k in {-n..-1, 1..n}:
///   g·k = (-1)^{eta(pi(|k|))} · sgn(k) · pi(|k|).
/// Throws std::out_of_range for k = 0 or |k| > n.
int act(const SignedPermutation& g, int k);

/// Order-preserving embedding of B_{n-1} into B_n that skips the letter
/// `drop` in {1..n}: the n-1 remaining letters of {1..n}, in increasing
/// order, carry the one-line data of g. The letter `drop` is fixed with
/// sign bit 0.
SignedPermutation embed(const SignedPermutation& g, int drop);

}  // namespace hyperoct
