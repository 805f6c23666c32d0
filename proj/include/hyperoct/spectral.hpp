#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperoct/group_index.hpp"
#include "hyperoct/representations.hpp"
#include "hyperoct/weighted_element.hpp"

namespace hyperoct {

/// All eigenvalues of a symmetric matrix, ascending, with multiplicity.
struct Spectrum {
  std::vector<double> values;
  int dim = 0;

  /// max(1, largest |eigenvalue|) — the scale used in relative tolerances.
  double scale() const;
};

/// Result of a spectral-gap computation. The gap is the (t+1)-th lowest
/// eigenvalue where t is the trivial multiplicity of the representation;
/// when t equals the dimension there is no nontrivial eigenvalue and the
/// gap is reported as infinite (a tagged state, never an IEEE infinity).
struct GapReport {
  Spectrum spectrum;
  int trivial_multiplicity = 0;
  std::optional<double> gap;  // nullopt <=> infinite
  RepLabel rep_label = RepLabel::Regular;

  bool infinite() const { return !gap.has_value(); }
  /// The finite gap value; throws std::logic_error when infinite.
  double value() const;
};

/// Eigenvalues of a symmetric matrix, ascending. Throws
/// std::invalid_argument on non-finite entries. Deterministic for
/// identical input.
Spectrum eigenvalues(const SymmetricMatrix& m);

/// ψ(w, rep) via the trivial-multiplicity rule: assembles Δ(w, rep),
/// counts t = trivial_multiplicity(rep, idx), and returns λ_{t+1} (or the
/// infinite state when t = dim). Requires w symmetric AND positive — for
/// positive w the Laplacian is PSD, so the bottom t eigenvalues are
/// exactly the trivial ones; non-positive w is rejected rather than
/// silently misclassified.
GapReport spectral_gap(const WeightedElement& w, const MatrixRep& rep, const GroupIndex& idx);

/// ψ(w) — the Cayley-graph spectral gap: spectral_gap against the regular
/// representation built from idx. The trivial multiplicity is asserted to
/// be 1, so this is λ₂ of the Cayley Laplacian.
GapReport cayley_gap(const WeightedElement& w, const GroupIndex& idx);

/// True iff λ₁(m) ≥ −tol · max(1, ‖m‖) with ‖m‖ the largest |eigenvalue|.
bool is_psd(const SymmetricMatrix& m, double tol);

/// Max over `trials` random vectors v (components uniform in [−1, 1]) of
/// |⟨Δ(w,rep) v, v⟩ − ½ Σ_g w_g ‖rep(g)v − v‖²|. Requires w symmetric.
double quadratic_form_check(const WeightedElement& w, const MatrixRep& rep, int trials,
                            std::uint64_t seed = 12345);

}  // namespace hyperoct
