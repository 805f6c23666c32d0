#pragma once

#include <cstdint>
#include <vector>

#include "hyperoct/class_a.hpp"
#include "hyperoct/group_index.hpp"
#include "hyperoct/spectral.hpp"

namespace hyperoct {

/// One application of the reduction θ: drop the selected letter ℓ from the
/// sign weights, redistribute the transposition weights touching ℓ over
/// the remaining pairs, and relabel the surviving letters into {1..n-1}.
struct ReductionStep {
  ClassAWeights input;   // rank n
  int ell = 0;           // the dropped letter
  ClassAWeights output;  // rank n-1, relabeled
  /// kept[r-1] = the original letter carried by new label r; this is the
  /// inverse of the order-preserving relabeling {1..n}∖{ℓ} → {1..n-1}.
  std::vector<int> kept;
};

/// Sign-weight restriction: keeps exactly the sets not containing ell
/// (masks stay in the rank-n frame).
SignWeightMap theta_n(const SignWeightMap& signs, int ell);

/// Transposition-weight redistribution around the letter m: with
/// S = Σ_{j≠m} b_jm, every pair {i,k} away from m receives
///   b_ik + b_im·b_km / S,
/// and pairs touching m are removed. When S = 0 the result is the plain
/// restriction (the redistribution terms vanish in the limit).
PairWeightMap theta_t(const PairWeightMap& trans, int m);

/// Full reduction at ℓ = select_ell(caw); requires rank ≥ 2.
ReductionStep reduce(const ClassAWeights& caw);

/// Rank-preserving relabeling that sends ell to n and the remaining
/// letters, in increasing order, to 1..n-1. Useful for working "without
/// loss of generality ℓ = n".
ClassAWeights relabel_for_drop(const ClassAWeights& caw, int ell);

/// Cone membership of w − θ(w): embeds θ(w) back (inverting the recorded
/// relabeling), forms δ = w − θ(w), and tests Δ(δ, regular_rep(idx)) for
/// positive semidefiniteness at tolerance tol. For a symmetric-sector idx
/// every term of δ must be unsigned (transposition-only weights).
bool octopus_check(const ClassAWeights& caw, const GroupIndex& idx, double tol);

/// ψ(w, P_n) ≤ ψ(θw, P_{n-1}) + tol. Requires rank ≥ 2. Note: this
/// inequality FAILS for some weight sets whose odd sign sets are not all
/// singletons — see the counterexample regression tests; the check
/// reports the numerical truth either way.
bool gap_monotonicity_check(const ClassAWeights& caw, double tol);

enum class SemirecursiveResult { Holds, Fails, PreconditionFailed };

/// The recursion bound ψ(w) ≥ min{ψ(z), ψ(w, P_n)} − tol for z of rank
/// n−1 (supported on the letters 1..n-1, embedded with letter n fixed).
/// The cone precondition w − z ∈ Γ is tested first via the regular
/// representation; when it fails the result is PreconditionFailed.
SemirecursiveResult semirecursive_check(const ClassAWeights& w, const ClassAWeights& z,
                                        const GroupIndex& idx, double tol);

/// Diagnostics for the rank-one discrepancy between the transposition
/// Laplacian M and its reduced completion Mθ, evaluated in the relabeled
/// frame where the dropped letter is n:
///   M − Mθ = L₁,  [L₁]_ij = d_i d_j / d_n,  d_i = −b_in,  d_n = Σ_i b_in,
/// together with its spectral consequences
///   λ₁(Mθ + F) = 2â_n,   λ₂(M) ≤ λ₃(Mθ),   λ₁(M + F) ≤ λ₂(Mθ + F),
/// where F = 2·diag(â). When no transposition touches the dropped letter
/// the rank-one part is vacuous (d_n = 0, discrepancy exactly zero).
struct RankOneReport {
  bool vacuous = false;
  double max_entry_deviation = 0.0;    // ‖M − Mθ − L₁‖_max
  double eq_two_ahat_deviation = 0.0;  // |λ₁(Mθ + F) − 2â_n|
  bool l22a_applicable = false;        // λ₃ exists only for rank ≥ 3
  double interlace_l22a_slack = 0.0;   // λ₃(Mθ) − λ₂(M)
  double interlace_l12_slack = 0.0;    // λ₂(Mθ + F) − λ₁(M + F)
  double scale = 1.0;                  // max(1, |eigenvalues| encountered)
};

RankOneReport rank_one_identity(const ClassAWeights& caw);

/// True iff the entrywise discrepancy is below entry_tol and the spectral
/// statements hold within spectral_tol · scale.
bool rank_one_identity_check(const ClassAWeights& caw, double entry_tol = 1e-12,
                             double spectral_tol = 1e-8);

/// The three sharpness families:
///   SignDominant:          w_ε = w_N⁻ + ε·w_T   (gap attained on the lifted block)
///   TranspositionDominant: w_ε = ε·w_N⁻ + w_T   (gap attained on the defining block)
///   EvenSets:              w_ε = w_N⁺ + ε·w_N⁻ + w_T with even-cardinality
///                          sets in w_N⁺ — the full-group gap drops below the
///                          2n-dimensional one (attained on the sign character).
enum class CounterexampleFamily { SignDominant, TranspositionDominant, EvenSets };

struct CounterexampleSpec {
  CounterexampleFamily family = CounterexampleFamily::SignDominant;
  int n = 2;
  double epsilon = 1e-3;
  SignWeightMap even_sets;      // a⁺ (EvenSets family only)
  SignWeightMap odd_sets;       // a⁻
  PairWeightMap transpositions; // b

  /// Unit weights: singleton odd sets {i}, path transpositions (i, i+1),
  /// and (for EvenSets) adjacent even pairs {i, i+1}.
  static CounterexampleSpec canonical(CounterexampleFamily family, int n, double epsilon);
};

struct CounterexampleReport {
  CounterexampleFamily family = CounterexampleFamily::SignDominant;
  int n = 0;
  double epsilon = 0.0;
  double gap_regular = 0.0;
  double gap_pn = 0.0;
  double gap_dn = 0.0;
  double gap_d0n = 0.0;  // lifted block
  double gap_jn = 0.0;
  double margin = 0.0;       // the family's strictness margin
  bool orderings_hold = false;
  bool theorem_equality = false;  // |ψ(w) − ψ(w, P_n)| ≤ tol·scale (informational)
  bool passed = false;
};

/// Builds w_ε for the family, validates the family conditions (positive
/// minimum sign totals where required; connected transposition graph),
/// computes the competing gaps, and evaluates the family's assertions:
///   SignDominant:          ψ(·,lifted) < ψ(·,defining) and theorem equality;
///   TranspositionDominant: the reverse strict inequality and theorem equality;
///   EvenSets:              ψ(·,J) < ψ(·,P) and ψ(·) < ψ(·,P) − tol.
CounterexampleReport counterexample(const CounterexampleSpec& spec, const GroupIndex& idx,
                                    double tol = 1e-8);

}  // namespace hyperoct
