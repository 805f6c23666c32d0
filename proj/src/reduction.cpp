#include "hyperoct/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hyperoct {

namespace {

double pair_weight(const PairWeightMap& trans, int i, int j) {
  auto it = trans.find({std::min(i, j), std::max(i, j)});
  return it == trans.end() ? 0.0 : it->second;
}

/// Graph Laplacian of the pair weights on the vertex set {1..n}.
Eigen::MatrixXd pair_laplacian(const PairWeightMap& trans, int n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [pair, b] : trans) {
    const int i = pair.first - 1;
    const int j = pair.second - 1;
    m(i, i) += b;
    m(j, j) += b;
    m(i, j) -= b;
    m(j, i) -= b;
  }
  return m;
}

std::vector<double> hat_of(const SignWeightMap& signs, int n) {
  std::vector<double> hat(static_cast<std::size_t>(n), 0.0);
  for (const auto& [mask, a] : signs) {
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) hat[static_cast<std::size_t>(i)] += a;
    }
  }
  return hat;
}

}  // namespace

SignWeightMap theta_n(const SignWeightMap& signs, int ell) {
  if (ell < 1 || ell > 32) throw std::invalid_argument("theta_n: bad index");
  const std::uint32_t bit = std::uint32_t{1} << (ell - 1);
  SignWeightMap out;
  for (const auto& [mask, a] : signs) {
    if (!(mask & bit)) out.emplace(mask, a);
  }
  return out;
}

PairWeightMap theta_t(const PairWeightMap& trans, int m) {
  double s = 0.0;
  std::vector<std::pair<int, double>> spokes;  // neighbors of m, ascending
  for (const auto& [pair, b] : trans) {
    if (pair.first == m) {
      s += b;
      spokes.emplace_back(pair.second, b);
    } else if (pair.second == m) {
      s += b;
      spokes.emplace_back(pair.first, b);
    }
  }
  // Map order visits pairs (i, m) with i < m before (m, j) with j > m, so
  // `spokes` is already sorted by letter.
  PairWeightMap out;
  for (const auto& [pair, b] : trans) {
    if (pair.first != m && pair.second != m) out.emplace(pair, b);
  }
  if (s > 0.0) {
    for (std::size_t a = 0; a < spokes.size(); ++a) {
      for (std::size_t c = a + 1; c < spokes.size(); ++c) {
        const int i = spokes[a].first;
        const int k = spokes[c].first;
        const double add = spokes[a].second * spokes[c].second / s;
        out[{i, k}] += add;
      }
    }
  }
  return out;
}

ReductionStep reduce(const ClassAWeights& caw) {
  const int n = caw.rank();
  if (n < 2) throw std::invalid_argument("reduce: rank must be >= 2");
  ReductionStep step{caw, caw.select_ell(), ClassAWeights(n - 1), {}};
  step.kept.reserve(static_cast<std::size_t>(n) - 1);
  for (int v = 1; v <= n; ++v) {
    if (v != step.ell) step.kept.push_back(v);
  }
  const std::uint32_t low = (std::uint32_t{1} << (step.ell - 1)) - 1;
  for (const auto& [mask, a] : theta_n(caw.sign_weights(), step.ell)) {
    const std::uint32_t compressed = (mask & low) | ((mask >> 1) & ~low);
    step.output.set_sign_weight(mask_to_set(compressed), a);
  }
  const auto shift = [&step](int v) { return v < step.ell ? v : v - 1; };
  for (const auto& [pair, b] : theta_t(caw.transposition_weights(), step.ell)) {
    step.output.set_transposition_weight(shift(pair.first), shift(pair.second), b);
  }
  return step;
}

ClassAWeights relabel_for_drop(const ClassAWeights& caw, int ell) {
  const int n = caw.rank();
  if (ell < 1 || ell > n) throw std::invalid_argument("relabel_for_drop: index out of range");
  const auto remap = [n, ell](int v) { return v == ell ? n : (v < ell ? v : v - 1); };
  ClassAWeights out(n);
  for (const auto& [mask, a] : caw.sign_weights()) {
    std::vector<int> set;
    for (int v : mask_to_set(mask)) set.push_back(remap(v));
    out.set_sign_weight(set, a);
  }
  for (const auto& [pair, b] : caw.transposition_weights()) {
    out.set_transposition_weight(remap(pair.first), remap(pair.second), b);
  }
  return out;
}

bool octopus_check(const ClassAWeights& caw, const GroupIndex& idx, double tol) {
  if (caw.rank() != idx.rank()) {
    throw std::invalid_argument("octopus_check: rank mismatch");
  }
  WeightedElement delta = caw.expand();
  if (caw.rank() >= 2) {
    const ReductionStep step = reduce(caw);
    delta -= embed_weighted(step.output.expand(), step.ell);
  }
  if (idx.symmetric_sector_only()) {
    for (const auto& [g, c] : delta.terms()) {
      (void)c;
      if (!g.is_unsigned()) {
        throw std::invalid_argument(
            "octopus_check: a symmetric-sector index requires transposition-only weights");
      }
    }
  }
  return is_psd(laplacian(delta, regular_rep(idx)), tol);
}

bool gap_monotonicity_check(const ClassAWeights& caw, double tol) {
  const int n = caw.rank();
  if (n < 2) throw std::invalid_argument("gap_monotonicity_check: rank must be >= 2");
  const GroupIndex::RankGuard guard{std::max(5, n)};
  const GroupIndex idx_n = GroupIndex::whole_group(n, guard);
  const GroupIndex idx_m = GroupIndex::whole_group(n - 1, guard);
  const double lhs = spectral_gap(caw.expand(), permutation_p(n), idx_n).value();
  const ReductionStep step = reduce(caw);
  const double rhs =
      spectral_gap(step.output.expand(), permutation_p(n - 1), idx_m).value();
  return lhs <= rhs + tol;
}

SemirecursiveResult semirecursive_check(const ClassAWeights& w, const ClassAWeights& z,
                                        const GroupIndex& idx, double tol) {
  const int n = w.rank();
  if (n < 2) throw std::invalid_argument("semirecursive_check: rank must be >= 2");
  if (z.rank() != n - 1) {
    throw std::invalid_argument("semirecursive_check: z must have rank n - 1");
  }
  if (idx.rank() != n || idx.symmetric_sector_only()) {
    throw std::invalid_argument("semirecursive_check: need the full-group enumeration");
  }
  const WeightedElement delta = w.expand() - embed_weighted(z.expand(), n);
  if (!is_psd(laplacian(delta, regular_rep(idx)), tol)) {
    return SemirecursiveResult::PreconditionFailed;
  }
  const double psi_w = cayley_gap(w.expand(), idx).value();
  const GroupIndex::RankGuard guard{std::max(5, n)};
  const GroupIndex idx_m = GroupIndex::whole_group(n - 1, guard);
  const double psi_z = cayley_gap(z.expand(), idx_m).value();
  const double psi_p = spectral_gap(w.expand(), permutation_p(n), idx).value();
  return psi_w + tol >= std::min(psi_z, psi_p) ? SemirecursiveResult::Holds
                                               : SemirecursiveResult::Fails;
}

RankOneReport rank_one_identity(const ClassAWeights& caw) {
  const int n = caw.rank();
  if (n < 2) throw std::invalid_argument("rank_one_identity: rank must be >= 2");
  const ClassAWeights rl = relabel_for_drop(caw, caw.select_ell());
  const PairWeightMap& b = rl.transposition_weights();

  const Eigen::MatrixXd m = pair_laplacian(b, n);
  double s = 0.0;
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  for (int i = 1; i < n; ++i) {
    const double w_in = pair_weight(b, i, n);
    d(i - 1) = -w_in;
    s += w_in;
  }
  d(n - 1) = s;

  const Eigen::MatrixXd mtheta = pair_laplacian(theta_t(b, n), n);

  RankOneReport report;
  report.vacuous = (s == 0.0);
  Eigen::MatrixXd l1 = Eigen::MatrixXd::Zero(n, n);
  if (!report.vacuous) l1 = (d * d.transpose()) / s;
  report.max_entry_deviation = (m - mtheta - l1).cwiseAbs().maxCoeff();

  const std::vector<double> hat = rl.a_hat();
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) f(i, i) = 2.0 * hat[static_cast<std::size_t>(i)];

  const Spectrum sm = eigenvalues(m);
  const Spectrum smt = eigenvalues(mtheta);
  const Spectrum smf = eigenvalues(m + f);
  const Spectrum smtf = eigenvalues(mtheta + f);
  report.scale = std::max({sm.scale(), smt.scale(), smf.scale(), smtf.scale()});
  report.eq_two_ahat_deviation =
      std::abs(smtf.values.front() - 2.0 * hat[static_cast<std::size_t>(n) - 1]);
  report.l22a_applicable = (n >= 3);
  if (report.l22a_applicable) {
    report.interlace_l22a_slack = smt.values[2] - sm.values[1];
  }
  report.interlace_l12_slack = smtf.values[1] - smf.values[0];
  return report;
}

bool rank_one_identity_check(const ClassAWeights& caw, double entry_tol,
                             double spectral_tol) {
  const RankOneReport r = rank_one_identity(caw);
  bool ok = r.max_entry_deviation <= entry_tol &&
            r.eq_two_ahat_deviation <= spectral_tol * r.scale &&
            r.interlace_l12_slack >= -spectral_tol * r.scale;
  if (r.l22a_applicable) {
    ok = ok && r.interlace_l22a_slack >= -spectral_tol * r.scale;
  }
  return ok;
}

CounterexampleSpec CounterexampleSpec::canonical(CounterexampleFamily family, int n,
                                                 double epsilon) {
  CounterexampleSpec spec;
  spec.family = family;
  spec.n = n;
  spec.epsilon = epsilon;
  for (int i = 1; i <= n; ++i) {
    spec.odd_sets[std::uint32_t{1} << (i - 1)] = 1.0;
  }
  for (int i = 1; i < n; ++i) {
    spec.transpositions[{i, i + 1}] = 1.0;
  }
  if (family == CounterexampleFamily::EvenSets) {
    for (int i = 1; i < n; ++i) {
      spec.even_sets[(std::uint32_t{1} << (i - 1)) | (std::uint32_t{1} << i)] = 1.0;
    }
  }
  return spec;
}

CounterexampleReport counterexample(const CounterexampleSpec& spec, const GroupIndex& idx,
                                    double tol) {
  const int n = spec.n;
  if (n < 2 || n > 32) throw std::invalid_argument("counterexample: n must be >= 2");
  if (idx.rank() != n || idx.symmetric_sector_only()) {
    throw std::invalid_argument("counterexample: need the full-group enumeration at rank n");
  }
  if (!(spec.epsilon > 0.0)) {
    throw std::invalid_argument("counterexample: epsilon must be > 0");
  }
  const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  for (const auto& [mask, a] : spec.odd_sets) {
    if (mask == 0 || (mask & ~full)) throw std::invalid_argument("counterexample: odd set out of range");
    if (std::popcount(mask) % 2 == 0) {
      throw std::invalid_argument("counterexample: odd_sets entries must have odd cardinality");
    }
    if (a < 0.0) throw std::invalid_argument("counterexample: negative sign weight");
  }
  for (const auto& [mask, a] : spec.even_sets) {
    if (mask == 0 || (mask & ~full)) throw std::invalid_argument("counterexample: even set out of range");
    if (std::popcount(mask) % 2 == 1) {
      throw std::invalid_argument("counterexample: even_sets entries must have even cardinality");
    }
    if (a < 0.0) throw std::invalid_argument("counterexample: negative sign weight");
  }
  if (spec.family != CounterexampleFamily::EvenSets && !spec.even_sets.empty()) {
    throw std::invalid_argument(
        "counterexample: even-cardinality sets are only admitted by the EvenSets family");
  }
  for (const auto& [pair, b] : spec.transpositions) {
    if (pair.first < 1 || pair.second > n || pair.first >= pair.second) {
      throw std::invalid_argument("counterexample: malformed transposition pair");
    }
    if (b < 0.0) throw std::invalid_argument("counterexample: negative transposition weight");
  }

  // Condition (ii): the transposition support must generate the symmetric
  // subgroup, i.e. the weight graph must be connected.
  {
    ClassAWeights graph(n);
    for (const auto& [pair, b] : spec.transpositions) {
      if (b > 0.0) graph.set_transposition_weight(pair.first, pair.second, b);
    }
    if (!graph.transposition_graph_connected()) {
      throw std::invalid_argument(
          "counterexample: transposition graph is not connected (the support would not "
          "generate the symmetric subgroup)");
    }
  }
  // Condition (i): positive minimum sign totals where the family needs them.
  {
    const std::vector<double> hat_minus = hat_of(spec.odd_sets, n);
    if (*std::min_element(hat_minus.begin(), hat_minus.end()) <= 0.0) {
      throw std::invalid_argument(
          "counterexample: every letter needs positive odd-set weight (min over i of "
          "the odd sign totals must be > 0)");
    }
    if (spec.family == CounterexampleFamily::EvenSets) {
      const std::vector<double> hat_plus = hat_of(spec.even_sets, n);
      if (*std::min_element(hat_plus.begin(), hat_plus.end()) <= 0.0) {
        throw std::invalid_argument(
            "counterexample: every letter needs positive even-set weight (min over i of "
            "the even sign totals must be > 0)");
      }
    }
  }

  const double odd_factor =
      spec.family == CounterexampleFamily::SignDominant ? 1.0 : spec.epsilon;
  const double trans_factor =
      spec.family == CounterexampleFamily::SignDominant ? spec.epsilon : 1.0;
  WeightedElement w(n);
  for (const auto& [mask, a] : spec.even_sets) {
    w.add(SignedPermutation::sign_flip(n, mask_to_set(mask)), a);
  }
  for (const auto& [mask, a] : spec.odd_sets) {
    w.add(SignedPermutation::sign_flip(n, mask_to_set(mask)), odd_factor * a);
  }
  for (const auto& [pair, b] : spec.transpositions) {
    w.add(SignedPermutation::transposition(n, pair.first, pair.second), trans_factor * b);
  }

  const GapReport regular = cayley_gap(w, idx);
  const GapReport pn = spectral_gap(w, permutation_p(n), idx);

  CounterexampleReport report;
  report.family = spec.family;
  report.n = n;
  report.epsilon = spec.epsilon;
  report.gap_regular = regular.value();
  report.gap_pn = pn.value();
  report.gap_dn = spectral_gap(w, defining_w(n), idx).value();
  report.gap_d0n = spectral_gap(w, lifted_defining_s(n), idx).value();
  report.gap_jn = spectral_gap(w, sign_j(n), idx).value();

  const double scale = std::max(regular.spectrum.scale(), pn.spectrum.scale());
  report.theorem_equality = std::abs(report.gap_regular - report.gap_pn) <= tol * scale;
  switch (spec.family) {
    case CounterexampleFamily::SignDominant:
      report.orderings_hold = report.gap_d0n < report.gap_dn;
      report.margin = report.gap_dn - report.gap_d0n;
      report.passed = report.orderings_hold && report.theorem_equality;
      break;
    case CounterexampleFamily::TranspositionDominant:
      report.orderings_hold = report.gap_dn < report.gap_d0n;
      report.margin = report.gap_d0n - report.gap_dn;
      report.passed = report.orderings_hold && report.theorem_equality;
      break;
    case CounterexampleFamily::EvenSets:
      report.orderings_hold =
          report.gap_jn < report.gap_pn && report.gap_regular < report.gap_pn - tol;
      report.margin = report.gap_pn - report.gap_regular;
      report.passed = report.orderings_hold;
      break;
  }
  return report;
}

}  // namespace hyperoct
