#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyperoct/class_a.hpp"
#include "hyperoct/group_index.hpp"
#include "hyperoct/representations.hpp"

using namespace hyperoct;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

void check_homomorphism(const MatrixRep& rep, const GroupIndex& idx, double tol) {
  const int n = idx.rank();
  CHECK(max_abs(rep.eval(SignedPermutation::identity(n)) -
                Eigen::MatrixXd::Identity(rep.dim(), rep.dim())) <= tol);
  for (const auto& g : idx.elements()) {
    const Eigen::MatrixXd mg = rep.eval(g);
    // Orthogonality of each representing matrix.
    CHECK(max_abs(mg * mg.transpose() - Eigen::MatrixXd::Identity(rep.dim(), rep.dim())) <= tol);
    for (const auto& h : idx.elements()) {
      CHECK(max_abs(rep.eval(multiply(g, h)) - mg * rep.eval(h)) <= tol);
    }
  }
}

}  // namespace

TEST_CASE("rep labels have stable names") {
  CHECK(rep_label_name(RepLabel::Regular) == "regular");
  CHECK(rep_label_name(RepLabel::DefiningW) == "dn");
  CHECK(rep_label_name(RepLabel::LiftedDefiningS) == "d0n_lifted");
  CHECK(rep_label_name(RepLabel::PermutationP) == "pn");
  CHECK(rep_label_name(RepLabel::SignJ) == "jn");
  CHECK(rep_label_name(RepLabel::DefiningS) == "d0n");
}

TEST_CASE("matrix reps are homomorphisms into the orthogonal group") {
  for (int n : {1, 2, 3}) {
    const GroupIndex idx = GroupIndex::whole_group(n);
    check_homomorphism(defining_w(n), idx, 0.0);
    check_homomorphism(lifted_defining_s(n), idx, 0.0);
    check_homomorphism(permutation_p(n), idx, 0.0);
    check_homomorphism(sign_j(n), idx, 0.0);
  }
  // The regular representation (entries are 0/1, products land exactly).
  check_homomorphism(regular_rep(GroupIndex::whole_group(2)), GroupIndex::whole_group(2), 0.0);
  check_homomorphism(regular_rep(GroupIndex::symmetric_subgroup(3)),
                     GroupIndex::symmetric_subgroup(3), 0.0);
  check_homomorphism(defining_s(3), GroupIndex::symmetric_subgroup(3), 0.0);
}

TEST_CASE("eval rejects rank mismatches") {
  CHECK_THROWS_AS(defining_w(2).eval(SignedPermutation::identity(3)), std::invalid_argument);
}

TEST_CASE("defining representation entries") {
  const auto s2 = SignedPermutation::sign_flip(3, {2});
  Eigen::MatrixXd expect = Eigen::MatrixXd::Identity(3, 3);
  expect(1, 1) = -1.0;
  CHECK(max_abs(defining_w(3).eval(s2) - expect) == 0.0);

  // Sign flips vanish in the lifted representation.
  CHECK(max_abs(lifted_defining_s(3).eval(s2) - Eigen::MatrixXd::Identity(3, 3)) == 0.0);

  const auto t = SignedPermutation::transposition(2, 1, 2);
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(max_abs(defining_w(2).eval(t) - swap) == 0.0);
}

TEST_CASE("sign character values") {
  const MatrixRep j = sign_j(3);
  CHECK(j.dim() == 1);
  CHECK(j.eval(SignedPermutation::transposition(3, 1, 3))(0, 0) == 1.0);
  CHECK(j.eval(SignedPermutation::sign_flip(3, {2}))(0, 0) == -1.0);
  CHECK(j.eval(SignedPermutation::sign_flip(3, {1, 3}))(0, 0) == 1.0);
  CHECK(j.eval(SignedPermutation::sign_flip(3, {1, 2, 3}))(0, 0) == -1.0);
}

TEST_CASE("the 2n-point representation permutes signed basis vectors") {
  // Basis order (-1, 1) at rank 1; the sign flip swaps the two points.
  const MatrixRep p1 = permutation_p(1);
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(max_abs(p1.eval(SignedPermutation::sign_flip(1, {1})) - swap) == 0.0);

  // Faithful at small rank: only the identity maps to the identity matrix.
  for (int n : {1, 2, 3}) {
    const MatrixRep p = permutation_p(n);
    const GroupIndex idx = GroupIndex::whole_group(n);
    int fixed = 0;
    for (const auto& g : idx.elements()) {
      if (max_abs(p.eval(g) - Eigen::MatrixXd::Identity(2 * n, 2 * n)) == 0.0) ++fixed;
    }
    CHECK(fixed == 1);
  }
}

TEST_CASE("the 2n-point representation splits into the two n-dim blocks") {
  for (int n : {1, 2, 3}) {
    const GroupIndex idx = GroupIndex::whole_group(n);
    const MatrixRep lift = lifted_defining_s(n);
    const MatrixRep sign = defining_w(n);
    for (const auto& g : idx.elements()) {
      const auto [plus, minus] = pn_block_decompose(n, g);
      CHECK(max_abs(plus - lift.eval(g)) <= 1e-12);
      CHECK(max_abs(minus - sign.eval(g)) <= 1e-12);
      CHECK(pn_blocks(n, g).off_block_max <= 1e-12);
    }
  }
}

TEST_CASE("laplacian assembly matches a hand computation at rank 2") {
  // Weights x = y = z = 1 on s_{1}, s_{2}, (1 2); against the defining
  // representation the Laplacian is [[3, -1], [-1, 3]].
  ClassAWeights caw(2);
  caw.set_sign_weight({1}, 1.0);
  caw.set_sign_weight({2}, 1.0);
  caw.set_transposition_weight(1, 2, 1.0);
  const SymmetricMatrix delta = laplacian(caw.expand(), defining_w(2));
  Eigen::MatrixXd expect(2, 2);
  expect << 3, -1, -1, 3;
  CHECK(max_abs(delta - expect) == 0.0);
}

TEST_CASE("laplacian requires a symmetric weighting") {
  WeightedElement w(3);
  w.add(multiply(SignedPermutation::transposition(3, 1, 2),
                 SignedPermutation::transposition(3, 2, 3)),
        1.0);
  CHECK_THROWS_AS(laplacian(w, defining_w(3)), std::invalid_argument);
  CHECK(max_abs(laplacian(WeightedElement(2), defining_w(2))) == 0.0);
}

TEST_CASE("sign-part Laplacians against the split blocks are exact") {
  // Against the lifted block the sign part contributes nothing at all;
  // against the defining block it is exactly twice the diagonal sign load;
  // against the sign character it is exactly twice the total sign weight.
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const ClassAWeights caw = random_class_a(3, 1.0, seed);
    const WeightedElement wn = caw.sign_part();

    CHECK(max_abs(laplacian(wn, lifted_defining_s(3))) == 0.0);

    const std::vector<double> ah = caw.a_hat();
    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(3, 3);
    for (int i = 0; i < 3; ++i) diag(i, i) = 2.0 * ah[i];
    CHECK(max_abs(laplacian(wn, defining_w(3)) - diag) == 0.0);

    double total = 0.0;
    for (const auto& [mask, a] : caw.sign_weights()) total += 2.0 * a;
    CHECK(laplacian(wn, sign_j(3))(0, 0) == total);

    // Transpositions act trivially on the sign character.
    CHECK(laplacian(caw.transposition_part(), sign_j(3))(0, 0) == 0.0);
  }
}

TEST_CASE("trivial multiplicities of the standard representations") {
  for (int n : {1, 2, 3}) {
    const GroupIndex idx = GroupIndex::whole_group(n);
    CHECK(trivial_multiplicity(permutation_p(n), idx) == 1);
    CHECK(trivial_multiplicity(lifted_defining_s(n), idx) == 1);
    CHECK(trivial_multiplicity(defining_w(n), idx) == 0);
    CHECK(trivial_multiplicity(sign_j(n), idx) == 0);
  }
  CHECK(trivial_multiplicity(regular_rep(GroupIndex::whole_group(2)),
                             GroupIndex::whole_group(2)) == 1);
  const GroupIndex s3 = GroupIndex::symmetric_subgroup(3);
  CHECK(trivial_multiplicity(defining_s(3), s3) == 1);
  CHECK(trivial_multiplicity(regular_rep(s3), s3) == 1);

  // A map that is not a representation has a non-integer averaged trace.
  const MatrixRep fake(RepLabel::Regular, 2, 1, [](const SignedPermutation&) {
    return Eigen::MatrixXd::Constant(1, 1, 0.4);
  });
  CHECK_THROWS_AS(trivial_multiplicity(fake, GroupIndex::whole_group(2)), std::logic_error);
}

TEST_CASE("every 2n-point eigenvalue appears in the regular spectrum") {
  for (int n : {2, 3}) {
    const GroupIndex idx = GroupIndex::whole_group(n);
    for (std::uint64_t seed : {11u, 12u, 13u}) {
      const ClassAWeights caw = random_class_a(n, 1.0, seed);
      const WeightedElement w = caw.expand();
      const Eigen::VectorXd ps =
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(laplacian(w, permutation_p(n)),
                                                         Eigen::EigenvaluesOnly)
              .eigenvalues();
      const Eigen::VectorXd ls =
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(laplacian(w, regular_rep(idx)),
                                                         Eigen::EigenvaluesOnly)
              .eigenvalues();
      const double scale = std::max(1.0, ls.cwiseAbs().maxCoeff());
      for (int i = 0; i < ps.size(); ++i) {
        double best = 1e300;
        for (int j = 0; j < ls.size(); ++j) best = std::min(best, std::abs(ps[i] - ls[j]));
        CHECK(best <= 1e-8 * scale);
      }
    }
  }
}
