#pragma once

#include <cstddef>
#include <map>

#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

/// A finitely supported real weighting w = Σ w_g · g of group elements of a
/// single rank n, i.e. an element of the real group algebra R[B_n]. Stored
/// sparsely; no stored coefficient is ever exactly zero.
class WeightedElement {
 public:
  explicit WeightedElement(int n);

  int rank() const { return rank_; }

  /// Adds c to the coefficient of g (erasing the term if the sum is
  /// exactly zero). Throws std::invalid_argument on rank mismatch.
  void add(const SignedPermutation& g, double c);

  /// Coefficient of g, 0.0 when absent.
  double coefficient(const SignedPermutation& g) const;

  const std::map<SignedPermutation, double>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  WeightedElement& operator+=(const WeightedElement& other);
  WeightedElement& operator-=(const WeightedElement& other);
  WeightedElement& operator*=(double c);

  friend WeightedElement operator+(WeightedElement a, const WeightedElement& b) {
    a += b;
    return a;
  }
  friend WeightedElement operator-(WeightedElement a, const WeightedElement& b) {
    a -= b;
    return a;
  }
  friend WeightedElement operator*(double c, WeightedElement a) {
    a *= c;
    return a;
  }

  friend bool operator==(const WeightedElement& a, const WeightedElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  int rank_;
  std::map<SignedPermutation, double> terms_;
};

/// The involution w* with (w*)_g = w_{g⁻¹}.
WeightedElement involution(const WeightedElement& w);

/// True iff w_g == w_{g⁻¹} holds exactly for every term.
bool is_symmetric(const WeightedElement& w);

/// True iff every stored coefficient is > 0.
bool is_positive(const WeightedElement& w);

/// Pushes w along the order-preserving embedding of B_{n-1} into B_n that
/// skips the letter `drop` (term by term; see embed()).
WeightedElement embed_weighted(const WeightedElement& w, int drop);

}  // namespace hyperoct
