#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "hyperoct/group_index.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/weighted_element.hpp"

namespace hyperoct {

/// Dense real symmetric matrix (symmetry maintained by construction; the
/// Laplacian assembler re-symmetrizes as a numerical guard).
using SymmetricMatrix = Eigen::MatrixXd;

enum class RepLabel { Regular, DefiningW, LiftedDefiningS, PermutationP, SignJ, DefiningS };

std::string rep_label_name(RepLabel label);

/// A concrete orthogonal matrix representation of B_n (or of its
/// symmetric subgroup, for DefiningS / sector-built Regular). eval() is a
/// group homomorphism into O(dim); this is tested exhaustively at small
/// rank rather than assumed.
class MatrixRep {
 public:
  MatrixRep(RepLabel label, int rank, int dim,
            std::function<Eigen::MatrixXd(const SignedPermutation&)> eval)
      : label_(label), rank_(rank), dim_(dim), eval_(std::move(eval)) {}

  RepLabel label() const { return label_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }

  /// The representing matrix of g. Throws std::invalid_argument on rank
  /// mismatch.
  Eigen::MatrixXd eval(const SignedPermutation& g) const;

 private:
  RepLabel label_;
  int rank_;
  int dim_;
  std::function<Eigen::MatrixXd(const SignedPermutation&)> eval_;
};

/// Left regular representation on the elements enumerated by idx:
/// eval(h) is the |G|×|G| permutation matrix with entry
/// (index(h·g), index(g)) = 1. For a symmetric-sector index this is the
/// regular representation of S_n (h must then be unsigned).
MatrixRep regular_rep(const GroupIndex& idx);

/// Defining representation of B_n: entry (i, j) of eval((eta, pi)) is
/// (−1)^{eta_i} δ_{i, pi(j)}. Dimension n.
MatrixRep defining_w(int n);

/// Lift of the S_n permutation representation through B_n → S_n: entry
/// (i, j) = δ_{i, pi(j)}, signs ignored. Dimension n.
MatrixRep lifted_defining_s(int n);

/// 2n-dimensional permutation representation on the basis indexed by
/// (−n, …, −1, 1, …, n): eval(g) e_k = e_{g·k} with g·k given by act().
MatrixRep permutation_p(int n);

/// One-dimensional sign representation: eval((eta, pi)) = [(−1)^{#{i : eta_i = 1}}].
MatrixRep sign_j(int n);

/// Defining (permutation) representation of the symmetric subgroup:
/// entry (i, j) = δ_{i, pi(j)}, for unsigned elements. Dimension n.
MatrixRep defining_s(int n);

/// Δ(w, R) = Σ_h w_h (I − R(h)), summed over the terms of w in their
/// canonical storage order and then symmetrized by (Δ + Δᵀ)/2 as a guard.
/// Requires w symmetric (w_g == w_{g⁻¹}); throws otherwise.
SymmetricMatrix laplacian(const WeightedElement& w, const MatrixRep& rep);

/// The two diagonal blocks of the permutation representation in the basis
/// (e⁺₁,…,e⁺ₙ, e⁻₁,…,e⁻ₙ), e±_k = (e_k ± e_{−k})/√2: returns
/// (plus block, minus block) which equal (lifted_defining_s.eval(g),
/// defining_w.eval(g)). Throws std::logic_error if an off-diagonal block
/// entry exceeds 1e-12 (an implementation bug, not a data error).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> pn_block_decompose(int n,
                                                               const SignedPermutation& g);

/// Like pn_block_decompose but also reports the largest off-diagonal-block
/// magnitude instead of asserting on it.
struct PnBlocks {
  Eigen::MatrixXd plus;
  Eigen::MatrixXd minus;
  double off_block_max = 0.0;
};
PnBlocks pn_blocks(int n, const SignedPermutation& g);

/// Multiplicity of the trivial representation in rep, computed as the
/// rounded trace of the group-averaging projector (1/|G|) Σ_g eval(g)
/// over the elements of idx. Throws std::logic_error if the trace is
/// farther than 1e-6 from an integer (signals a non-representation).
int trivial_multiplicity(const MatrixRep& rep, const GroupIndex& idx);

}  // namespace hyperoct
