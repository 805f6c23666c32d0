#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <stdexcept>
#include <vector>

#include "hyperoct/class_a.hpp"
#include "hyperoct/weighted_element.hpp"

using namespace hyperoct;

TEST_CASE("weighted elements accumulate and erase exact zeros") {
  WeightedElement w(2);
  const auto t = SignedPermutation::transposition(2, 1, 2);
  w.add(t, 1.5);
  w.add(t, 0.5);
  CHECK(w.coefficient(t) == doctest::Approx(2.0));
  CHECK(w.support_size() == 1);
  w.add(t, -2.0);
  CHECK(w.support_size() == 0);
  CHECK(w.empty());
  CHECK(w.coefficient(t) == 0.0);

  CHECK_THROWS_AS(w.add(SignedPermutation::identity(3), 1.0), std::invalid_argument);
}

TEST_CASE("arithmetic on weighted elements") {
  WeightedElement a(2), b(2);
  const auto t = SignedPermutation::transposition(2, 1, 2);
  const auto s = SignedPermutation::sign_flip(2, {1});
  a.add(t, 1.0);
  b.add(t, 2.0);
  b.add(s, 3.0);
  a += b;
  CHECK(a.coefficient(t) == doctest::Approx(3.0));
  CHECK(a.coefficient(s) == doctest::Approx(3.0));
  a -= b;
  CHECK(a.coefficient(t) == doctest::Approx(1.0));
  CHECK(a.support_size() == 1);
  a *= 4.0;
  CHECK(a.coefficient(t) == doctest::Approx(4.0));
  a *= 0.0;
  CHECK(a.empty());
}

TEST_CASE("involution flips every group element to its inverse") {
  // A 3-cycle is not an involution, so conjugating the weights moves mass.
  WeightedElement w(3);
  const auto c = multiply(SignedPermutation::transposition(3, 1, 2),
                          SignedPermutation::transposition(3, 2, 3));
  w.add(c, 2.0);
  CHECK_FALSE(is_symmetric(w));
  const WeightedElement wi = involution(w);
  CHECK(wi.coefficient(inverse(c)) == doctest::Approx(2.0));
  CHECK(wi.coefficient(c) == 0.0);
  CHECK(involution(wi).coefficient(c) == doctest::Approx(2.0));

  WeightedElement sym = w;
  sym += wi;
  CHECK(is_symmetric(sym));
}

TEST_CASE("positivity requires every stored weight to be positive") {
  WeightedElement w(2);
  CHECK(is_positive(w));  // vacuously
  w.add(SignedPermutation::identity(2), -1.0);
  CHECK(is_symmetric(w));
  CHECK_FALSE(is_positive(w));
}

TEST_CASE("embedding a weighted element is term-by-term") {
  WeightedElement w(2);
  w.add(SignedPermutation::transposition(2, 1, 2), 2.5);
  w.add(SignedPermutation::sign_flip(2, {2}), 0.5);
  const WeightedElement e = embed_weighted(w, 1);
  CHECK(e.rank() == 3);
  CHECK(e.coefficient(SignedPermutation::transposition(3, 2, 3)) == doctest::Approx(2.5));
  CHECK(e.coefficient(SignedPermutation::sign_flip(3, {3})) == doctest::Approx(0.5));
}

TEST_CASE("set/mask conversions round-trip") {
  CHECK(set_to_mask(3, {1, 3}) == 0b101);
  CHECK(mask_to_set(0b101) == std::vector<int>{1, 3});
  CHECK_THROWS_AS(set_to_mask(2, {3}), std::invalid_argument);
  CHECK_THROWS_AS(set_to_mask(2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(set_to_mask(2, {1, 1}), std::invalid_argument);
}

TEST_CASE("class weights validate sign sets and transposition pairs") {
  ClassAWeights caw(3);
  CHECK_NOTHROW(caw.set_sign_weight({1, 2, 3}, 1.0));
  CHECK_NOTHROW(caw.set_sign_weight({2}, 0.25));
  CHECK(caw.sign_weight({2}) == doctest::Approx(0.25));
  CHECK_THROWS_AS(caw.set_sign_weight({1, 2}, 1.0), std::invalid_argument);  // even
  CHECK_THROWS_AS(caw.set_sign_weight({}, 1.0), std::invalid_argument);      // empty
  CHECK_THROWS_AS(caw.set_sign_weight({4}, 1.0), std::invalid_argument);     // range
  CHECK_THROWS_AS(caw.set_sign_weight({1}, -0.5), std::invalid_argument);    // negative
  CHECK_NOTHROW(caw.set_transposition_weight(3, 1, 2.0));  // stored as (1,3)
  CHECK(caw.transposition_weights().count({1, 3}) == 1);
  CHECK(caw.transposition_weight(1, 3) == doctest::Approx(2.0));
  CHECK(caw.transposition_weight(3, 1) == doctest::Approx(2.0));
  CHECK_THROWS_AS(caw.set_transposition_weight(1, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(caw.set_transposition_weight(0, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(caw.set_transposition_weight(1, 2, -1.0), std::invalid_argument);

  // Zero weight erases the entry.
  caw.set_sign_weight({2}, 0.0);
  CHECK(caw.sign_weights().count(set_to_mask(3, {2})) == 0);
  CHECK(caw.sign_weight({2}) == 0.0);
}

TEST_CASE("expansion produces the advertised support") {
  ClassAWeights caw(2);
  caw.set_sign_weight({1}, 0.5);
  caw.set_sign_weight({2}, 1.5);
  caw.set_transposition_weight(1, 2, 2.0);
  const WeightedElement w = caw.expand();
  CHECK(w.support_size() == 3);
  CHECK(w.coefficient(SignedPermutation::sign_flip(2, {1})) == doctest::Approx(0.5));
  CHECK(w.coefficient(SignedPermutation::sign_flip(2, {2})) == doctest::Approx(1.5));
  CHECK(w.coefficient(SignedPermutation::transposition(2, 1, 2)) == doctest::Approx(2.0));
  CHECK(is_symmetric(w));
  CHECK(is_positive(w));

  CHECK(ClassAWeights(3).expand().empty());
  CHECK(caw.sign_part().support_size() == 2);
  CHECK(caw.transposition_part().support_size() == 1);
}

TEST_CASE("expansion iterates sign flips first, masks ascending") {
  ClassAWeights caw(3);
  caw.set_sign_weight({3}, 1.0);
  caw.set_sign_weight({1}, 1.0);
  caw.set_sign_weight({1, 2, 3}, 1.0);
  caw.set_transposition_weight(1, 2, 1.0);
  const WeightedElement w = caw.expand();
  std::vector<SignedPermutation> order;
  for (const auto& [g, c] : w.terms()) order.push_back(g);
  REQUIRE(order.size() == 4);
  CHECK(order[0] == SignedPermutation::sign_flip(3, {1}));
  CHECK(order[1] == SignedPermutation::sign_flip(3, {3}));
  CHECK(order[2] == SignedPermutation::sign_flip(3, {1, 2, 3}));
  CHECK(order[3] == SignedPermutation::transposition(3, 1, 2));
}

TEST_CASE("per-letter sign load") {
  ClassAWeights caw(2);
  caw.set_sign_weight({1}, 0.75);
  caw.set_sign_weight({2}, 0.25);
  const std::vector<double> ah = caw.a_hat();
  REQUIRE(ah.size() == 2);
  CHECK(ah[0] == doctest::Approx(0.75));
  CHECK(ah[1] == doctest::Approx(0.25));

  ClassAWeights big(3);
  big.set_sign_weight({1, 2, 3}, 1.0);
  big.set_sign_weight({1}, 2.0);
  const std::vector<double> ah3 = big.a_hat();
  CHECK(ah3[0] == doctest::Approx(3.0));
  CHECK(ah3[1] == doctest::Approx(1.0));
  CHECK(ah3[2] == doctest::Approx(1.0));

  // a_hat is additive in the weights.
  ClassAWeights twice(3);
  twice.set_sign_weight({1, 2, 3}, 2.0);
  twice.set_sign_weight({1}, 4.0);
  const std::vector<double> ah6 = twice.a_hat();
  for (int i = 0; i < 3; ++i) CHECK(ah6[i] == doctest::Approx(2.0 * ah3[i]));
}

TEST_CASE("the dropped letter is the largest minimiser of the sign load") {
  ClassAWeights flat(3);
  flat.set_sign_weight({1, 2, 3}, 1.0);
  CHECK(flat.select_ell() == 3);  // ties resolve to the largest index

  ClassAWeights skew(3);
  skew.set_sign_weight({1, 2, 3}, 1.0);
  skew.set_sign_weight({1}, 2.0);
  CHECK(skew.select_ell() == 3);  // loads (3,1,1)

  ClassAWeights middle(3);
  middle.set_sign_weight({2}, 5.0);
  CHECK(middle.select_ell() == 3);  // loads (0,5,0), minimum 0 at 1 and 3

  ClassAWeights first(3);
  first.set_sign_weight({2}, 1.0);
  first.set_sign_weight({3}, 1.0);
  CHECK(first.select_ell() == 1);  // loads (0,1,1), unique minimum

  CHECK(ClassAWeights(4).select_ell() == 4);  // all-zero loads
}

TEST_CASE("random weights are deterministic in the seed") {
  const ClassAWeights a = random_class_a(3, 1.0, 42);
  const ClassAWeights b = random_class_a(3, 1.0, 42);
  CHECK(a.sign_weights() == b.sign_weights());
  CHECK(a.transposition_weights() == b.transposition_weights());
  CHECK(weight_digest(a) == weight_digest(b));

  const ClassAWeights c = random_class_a(3, 1.0, 43);
  CHECK(weight_digest(a) != weight_digest(c));

  // Density 1 keeps every odd subset and every pair: 4 + 3 at rank 3.
  CHECK(a.sign_weights().size() == 4);
  CHECK(a.transposition_weights().size() == 3);
  for (const auto& [mask, v] : a.sign_weights()) {
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }

  CHECK(random_class_a(3, 0.0, 7).empty());

  const ClassAWeights t = random_transpositions(4, 1.0, 9);
  CHECK(t.sign_weights().empty());
  CHECK(t.transposition_weights().size() == 6);
}

TEST_CASE("weights parse from JSON and round-trip") {
  const std::string text = R"({
    "n": 3,
    "sign_flips": [
      {"set": [1], "weight": 0.5},
      {"set": [1, 2, 3], "weight": 1.0}
    ],
    "transpositions": [
      {"i": 1, "j": 2, "weight": 2.0}
    ]
  })";
  const ClassAWeights caw = class_a_from_json(text);
  CHECK(caw.rank() == 3);
  CHECK(caw.sign_weights().at(set_to_mask(3, {1})) == doctest::Approx(0.5));
  CHECK(caw.sign_weights().at(set_to_mask(3, {1, 2, 3})) == doctest::Approx(1.0));
  CHECK(caw.transposition_weights().at({1, 2}) == doctest::Approx(2.0));

  const ClassAWeights again = class_a_from_json(class_a_to_json(caw));
  CHECK(again.sign_weights() == caw.sign_weights());
  CHECK(again.transposition_weights() == caw.transposition_weights());
  CHECK(weight_digest(again) == weight_digest(caw));
}

TEST_CASE("JSON validation rejects malformed weight files") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(class_a_from_json(text), std::invalid_argument);
  };
  bad("not json at all");
  bad(R"({"sign_flips": [], "transpositions": []})");                       // missing n
  bad(R"({"n": 0, "sign_flips": [], "transpositions": []})");               // bad n
  bad(R"({"n": 2, "sign_flips": [], "transpositions": [], "extra": 1})");   // unknown key
  bad(R"({"n": 2, "sign_flips": [{"set": [1, 2], "weight": 1}], "transpositions": []})");  // even set
  bad(R"({"n": 2, "sign_flips": [{"set": [2, 1, 2], "weight": 1}], "transpositions": []})");  // not increasing
  bad(R"({"n": 2, "sign_flips": [{"set": [1], "weight": -1}], "transpositions": []})");   // negative
  bad(R"({"n": 2, "sign_flips": [{"set": [1], "weight": 1}, {"set": [1], "weight": 1}], "transpositions": []})");  // duplicate
  bad(R"({"n": 2, "sign_flips": [{"set": [3], "weight": 1}], "transpositions": []})");    // out of range
  bad(R"({"n": 2, "sign_flips": [{"set": [1.5], "weight": 1}], "transpositions": []})");  // non-integer
  bad(R"({"n": 2, "sign_flips": [], "transpositions": [{"i": 1, "j": 1, "weight": 1}]})");  // i == j
  bad(R"({"n": 2, "sign_flips": [], "transpositions": [{"i": 1, "j": 2, "weight": 1}, {"i": 2, "j": 1, "weight": 1}]})");  // duplicate pair
  bad(R"({"n": 2, "sign_flips": [], "transpositions": [{"i": 1, "weight": 1}]})");        // missing j
  bad(R"({"n": 2, "sign_flips": [{"set": [1], "weight": 1, "why": 2}], "transpositions": []})");  // unknown entry key
}

TEST_CASE("connectivity of the transposition support") {
  ClassAWeights path(3);
  path.set_transposition_weight(1, 2, 1.0);
  path.set_transposition_weight(2, 3, 1.0);
  CHECK(path.transposition_graph_connected());

  ClassAWeights gap(3);
  gap.set_transposition_weight(1, 2, 1.0);
  CHECK_FALSE(gap.transposition_graph_connected());

  CHECK(ClassAWeights(1).transposition_graph_connected());
  CHECK_FALSE(ClassAWeights(2).transposition_graph_connected());
}

TEST_CASE("the digest is sensitive to weights and stable in form") {
  ClassAWeights caw(2);
  caw.set_sign_weight({1}, 0.5);
  const std::string d1 = weight_digest(caw);
  CHECK(d1.size() == 16);
  for (char ch : d1) CHECK(std::isxdigit(static_cast<unsigned char>(ch)));
  caw.set_sign_weight({1}, 0.5000000001);
  CHECK(weight_digest(caw) != d1);
}
