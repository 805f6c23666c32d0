#include "hyperoct/weighted_element.hpp"

#include <stdexcept>

namespace hyperoct {

WeightedElement::WeightedElement(int n) : rank_(n) {
  if (n < 1) throw std::invalid_argument("WeightedElement: rank must be >= 1");
}

void WeightedElement::add(const SignedPermutation& g, double c) {
  if (g.rank() != rank_) {
    throw std::invalid_argument("WeightedElement::add: rank mismatch");
  }
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double WeightedElement::coefficient(const SignedPermutation& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? 0.0 : it->second;
}

WeightedElement& WeightedElement::operator+=(const WeightedElement& other) {
  if (other.rank_ != rank_) {
    throw std::invalid_argument("WeightedElement: rank mismatch in +=");
  }
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

WeightedElement& WeightedElement::operator-=(const WeightedElement& other) {
  if (other.rank_ != rank_) {
    throw std::invalid_argument("WeightedElement: rank mismatch in -=");
  }
  for (const auto& [g, c] : other.terms_) add(g, -c);
  return *this;
}

WeightedElement& WeightedElement::operator*=(double c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

WeightedElement involution(const WeightedElement& w) {
  WeightedElement out(w.rank());
  for (const auto& [g, c] : w.terms()) out.add(inverse(g), c);
  return out;
}

bool is_symmetric(const WeightedElement& w) {
  for (const auto& [g, c] : w.terms()) {
    if (w.coefficient(inverse(g)) != c) return false;
  }
  return true;
}

bool is_positive(const WeightedElement& w) {
  for (const auto& [g, c] : w.terms()) {
    if (!(c > 0.0)) return false;
  }
  return true;
}

WeightedElement embed_weighted(const WeightedElement& w, int drop) {
  WeightedElement out(w.rank() + 1);
  for (const auto& [g, c] : w.terms()) out.add(embed(g, drop), c);
  return out;
}

}  // namespace hyperoct
