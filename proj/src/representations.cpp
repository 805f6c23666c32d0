#include "hyperoct/representations.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace hyperoct {

namespace {

/// Basis position of k in (−n, …, −1, 1, …, n), 0-based.
inline int pn_pos(int n, int k) { return k < 0 ? k + n : k + n - 1; }

Eigen::MatrixXd pn_basis_change(int n) {
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  const double r = 1.0 / std::sqrt(2.0);
  for (int k = 1; k <= n; ++k) {
    u(pn_pos(n, k), k - 1) = r;       // e+_k
    u(pn_pos(n, -k), k - 1) = r;
    u(pn_pos(n, k), n + k - 1) = r;   // e-_k
    u(pn_pos(n, -k), n + k - 1) = -r;
  }
  return u;
}

}  // namespace

std::string rep_label_name(RepLabel label) {
  switch (label) {
    case RepLabel::Regular: return "regular";
    case RepLabel::DefiningW: return "dn";
    case RepLabel::LiftedDefiningS: return "d0n_lifted";
    case RepLabel::PermutationP: return "pn";
    case RepLabel::SignJ: return "jn";
    case RepLabel::DefiningS: return "d0n";
  }
  return "unknown";
}

Eigen::MatrixXd MatrixRep::eval(const SignedPermutation& g) const {
  if (g.rank() != rank_) {
    throw std::invalid_argument("MatrixRep::eval: rank mismatch");
  }
  return eval_(g);
}

MatrixRep regular_rep(const GroupIndex& idx) {
  const int dim = static_cast<int>(idx.order());
  return MatrixRep(RepLabel::Regular, idx.rank(), dim,
                   [idx, dim](const SignedPermutation& h) {
                     Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
                     for (int j = 0; j < dim; ++j) {
                       const std::size_t i =
                           idx.index_of(multiply(h, idx.element(static_cast<std::size_t>(j))));
                       m(static_cast<Eigen::Index>(i), j) = 1.0;
                     }
                     return m;
                   });
}

MatrixRep defining_w(int n) {
  return MatrixRep(RepLabel::DefiningW, n, n, [n](const SignedPermutation& g) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int j = 1; j <= n; ++j) {
      const int i = g.image(j);
      m(i - 1, j - 1) = g.sign_bit(i) ? -1.0 : 1.0;
    }
    return m;
  });
}

MatrixRep lifted_defining_s(int n) {
  return MatrixRep(RepLabel::LiftedDefiningS, n, n, [n](const SignedPermutation& g) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int j = 1; j <= n; ++j) {
      m(g.image(j) - 1, j - 1) = 1.0;
    }
    return m;
  });
}

MatrixRep permutation_p(int n) {
  return MatrixRep(RepLabel::PermutationP, n, 2 * n, [n](const SignedPermutation& g) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int k = -n; k <= n; ++k) {
      if (k == 0) continue;
      m(pn_pos(n, act(g, k)), pn_pos(n, k)) = 1.0;
    }
    return m;
  });
}

MatrixRep sign_j(int n) {
  return MatrixRep(RepLabel::SignJ, n, 1, [](const SignedPermutation& g) {
    Eigen::MatrixXd m(1, 1);
    m(0, 0) = std::popcount(g.eta_mask()) % 2 == 0 ? 1.0 : -1.0;
    return m;
  });
}

MatrixRep defining_s(int n) {
  return MatrixRep(RepLabel::DefiningS, n, n, [n](const SignedPermutation& g) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int j = 1; j <= n; ++j) {
      m(g.image(j) - 1, j - 1) = 1.0;
    }
    return m;
  });
}

SymmetricMatrix laplacian(const WeightedElement& w, const MatrixRep& rep) {
  if (w.rank() != rep.rank()) {
    throw std::invalid_argument("laplacian: weight/representation rank mismatch");
  }
  if (!is_symmetric(w)) {
    throw std::invalid_argument("laplacian: weights must be symmetric (w_g == w_{g^-1})");
  }
  const int d = rep.dim();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d, d);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  for (const auto& [g, c] : w.terms()) {
    sum += c * (id - rep.eval(g));
  }
  return 0.5 * (sum + sum.transpose().eval());
}

PnBlocks pn_blocks(int n, const SignedPermutation& g) {
  const Eigen::MatrixXd u = pn_basis_change(n);
  const Eigen::MatrixXd c = u.transpose() * permutation_p(n).eval(g) * u;
  PnBlocks out;
  out.plus = c.topLeftCorner(n, n);
  out.minus = c.bottomRightCorner(n, n);
  out.off_block_max = std::max(c.topRightCorner(n, n).cwiseAbs().maxCoeff(),
                               c.bottomLeftCorner(n, n).cwiseAbs().maxCoeff());
  return out;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> pn_block_decompose(int n,
                                                               const SignedPermutation& g) {
  PnBlocks blocks = pn_blocks(n, g);
  if (blocks.off_block_max > 1e-12) {
    throw std::logic_error("pn_block_decompose: off-diagonal block is nonzero");
  }
  return {std::move(blocks.plus), std::move(blocks.minus)};
}

int trivial_multiplicity(const MatrixRep& rep, const GroupIndex& idx) {
  if (rep.rank() != idx.rank()) {
    throw std::invalid_argument("trivial_multiplicity: rank mismatch");
  }
  const int d = rep.dim();
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(d, d);
  for (const SignedPermutation& g : idx.elements()) {
    avg += rep.eval(g);
  }
  const double trace = avg.trace() / static_cast<double>(idx.order());
  const double rounded = std::round(trace);
  if (std::abs(trace - rounded) >= 1e-6) {
    throw std::logic_error("trivial_multiplicity: averaging trace is not near an integer");
  }
  return static_cast<int>(rounded);
}

}  // namespace hyperoct
