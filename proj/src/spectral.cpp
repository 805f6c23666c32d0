#include "hyperoct/spectral.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hyperoct {

double Spectrum::scale() const {
  double s = 1.0;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

double GapReport::value() const {
  if (!gap) throw std::logic_error("GapReport::value: gap is infinite");
  return *gap;
}

Spectrum eigenvalues(const SymmetricMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigenvalues: matrix must be square");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("eigenvalues: matrix has non-finite entries");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalues: eigensolver failed to converge");
  }
  Spectrum s;
  s.dim = static_cast<int>(m.rows());
  s.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  return s;
}

GapReport spectral_gap(const WeightedElement& w, const MatrixRep& rep,
                       const GroupIndex& idx) {
  if (!is_positive(w)) {
    throw std::invalid_argument(
        "spectral_gap: weights must be positive (the trivial-eigenvalue count rule "
        "requires a PSD Laplacian)");
  }
  GapReport report;
  report.rep_label = rep.label();
  report.spectrum = eigenvalues(laplacian(w, rep));
  report.trivial_multiplicity = trivial_multiplicity(rep, idx);
  const int t = report.trivial_multiplicity;
  if (t < report.spectrum.dim) {
    report.gap = report.spectrum.values[static_cast<std::size_t>(t)];
  }
  return report;
}

GapReport cayley_gap(const WeightedElement& w, const GroupIndex& idx) {
  GapReport report = spectral_gap(w, regular_rep(idx), idx);
  if (report.trivial_multiplicity != 1) {
    throw std::logic_error("cayley_gap: regular representation must contain the trivial "
                           "representation exactly once");
  }
  return report;
}

bool is_psd(const SymmetricMatrix& m, double tol) {
  const Spectrum s = eigenvalues(m);
  if (s.values.empty()) return true;
  return s.values.front() >= -tol * s.scale();
}

double quadratic_form_check(const WeightedElement& w, const MatrixRep& rep, int trials,
                            std::uint64_t seed) {
  if (w.rank() != rep.rank()) {
    throw std::invalid_argument("quadratic_form_check: rank mismatch");
  }
  const SymmetricMatrix delta = laplacian(w, rep);
  const int d = rep.dim();
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) v(i) = 2.0 * unit() - 1.0;
    const double lhs = v.dot(delta * v);
    double rhs = 0.0;
    for (const auto& [g, c] : w.terms()) {
      rhs += 0.5 * c * (rep.eval(g) * v - v).squaredNorm();
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace hyperoct
