#include "lsd/tight_binding.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lsd/errors.hpp"
#include "lsd/tridiagonal.hpp"

namespace lsd {

std::map<int, double> TbParams::default_onsite() {
  std::map<int, double> m;
  for (int id = 0; id < 7; ++id) m[id] = static_cast<double>(id + 1);
  return m;
}

Eigen::MatrixXd Hamiltonian::dense() const {
  const Eigen::Index n = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.diagonal() = diagonal;
  if (n > 1) {
    m.diagonal(1) = offdiagonal;
    m.diagonal(-1) = offdiagonal;
  }
  if (corner) {
    m(0, n - 1) += *corner;
    m(n - 1, 0) += *corner;
  }
  return m;
}

Hamiltonian build_hamiltonian(const Chain& chain, const TbParams& params) {
  if (chain.empty()) throw std::invalid_argument("cannot build a Hamiltonian from an empty chain");
  if (params.boundary == Boundary::periodic && chain.size() < 3)
    throw std::invalid_argument("periodic boundary requires at least 3 sites");
  if (!std::isfinite(params.coupling))
    throw std::invalid_argument("coupling must be finite");
  if (params.coupling == 0.0 && chain.size() > 1)
    throw std::invalid_argument("coupling must be nonzero for a connected chain");

  const Eigen::Index n = static_cast<Eigen::Index>(chain.size());
  Hamiltonian h;
  h.diagonal.resize(n);
  const int alphabet = chain.alphabet_size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Symbol s = chain[static_cast<std::size_t>(i)];
    const auto it = params.onsite.find(s.id);
    if (it == params.onsite.end())
      throw std::invalid_argument("no on-site energy for symbol " + to_string(s, alphabet));
    h.diagonal[i] = it->second;
  }
  h.offdiagonal = Eigen::VectorXd::Constant(std::max<Eigen::Index>(n - 1, 0), params.coupling);
  if (params.boundary == Boundary::periodic) h.corner = params.coupling;
  return h;
}

namespace {

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

// Small dense symmetric eigenproblem, ascending, via the same QL core.
void dense_symmetric_eig(const Eigen::MatrixXd& m, Eigen::VectorXd& values,
                         Eigen::MatrixXd& vectors) {
  const Eigen::Index n = m.rows();
  if (n == 1) {
    values = m.diagonal();
    vectors = Eigen::MatrixXd::Ones(1, 1);
    return;
  }
  Eigen::Tridiagonalization<Eigen::MatrixXd> reduction(m);
  values = reduction.diagonal();
  Eigen::VectorXd sub = reduction.subDiagonal();
  vectors = reduction.matrixQ();
  ql_implicit_shift(values, sub, &vectors);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&values](Eigen::Index a, Eigen::Index b) { return values[a] < values[b]; });
  Eigen::VectorXd sorted_values(n);
  Eigen::MatrixXd sorted_vectors(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sorted_values[k] = values[order[static_cast<std::size_t>(k)]];
    sorted_vectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
  }
  values = std::move(sorted_values);
  vectors = std::move(sorted_vectors);
}

// Within a numerically degenerate cluster any orthonormal basis of the
// eigenspace is equally valid, and the one the iteration happens to return
// depends on noise-scale detunings. Diagonalizing the site-position operator
// restricted to the cluster picks the maximally localized representatives,
// ordered by ascending localization center, making state indices and maps
// reproducible. The rotation moves residuals by at most the cluster width,
// which the tolerance below keeps well inside the 1e-8*max(1,||H||) contract.
void localize_degenerate_clusters(Spectrum& spectrum) {
  const Eigen::Index n = spectrum.size();
  const double scale = std::max(1.0, spectrum.eigenvalues.cwiseAbs().maxCoeff());
  const double gap_tol = 1e-9 * scale;
  const Eigen::VectorXd positions = Eigen::VectorXd::LinSpaced(n, 0.0, double(n - 1));

  Eigen::Index lo = 0;
  while (lo < n) {
    Eigen::Index hi = lo + 1;
    while (hi < n && spectrum.eigenvalues[hi] - spectrum.eigenvalues[hi - 1] <= gap_tol) ++hi;
    if (hi - lo > 1) {
      const Eigen::MatrixXd block = spectrum.eigenvectors.middleCols(lo, hi - lo);
      const Eigen::MatrixXd projected =
          block.transpose() * positions.asDiagonal() * block;
      Eigen::VectorXd centers;
      Eigen::MatrixXd rotation;
      dense_symmetric_eig(projected, centers, rotation);
      spectrum.eigenvectors.middleCols(lo, hi - lo) = block * rotation;
      for (Eigen::Index k = lo; k < hi; ++k) fix_sign(spectrum.eigenvectors.col(k));
    }
    lo = hi;
  }
}

}  // namespace

Spectrum eigendecompose(const Hamiltonian& h) {
  const Eigen::Index n = h.size();
  if (n < 1) throw std::invalid_argument("empty Hamiltonian");

  Eigen::VectorXd d = h.diagonal;
  Eigen::MatrixXd z;
  if (n == 1) {
    z = Eigen::MatrixXd::Ones(1, 1);
  } else if (!h.corner) {
    Eigen::VectorXd e = h.offdiagonal;
    z = Eigen::MatrixXd::Identity(n, n);
    ql_implicit_shift(d, e, &z);
  } else {
    // Ring topology: reduce the dense symmetric matrix to tridiagonal form
    // first, then run the same QL iteration with the reduction basis as the
    // starting accumulation.
    Eigen::Tridiagonalization<Eigen::MatrixXd> reduction(h.dense());
    d = reduction.diagonal();
    Eigen::VectorXd e = reduction.subDiagonal();
    z = reduction.matrixQ();
    ql_implicit_shift(d, e, &z);
  }

  // Ascending eigenvalues, then the degenerate-cluster treatment below.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&d](Eigen::Index a, Eigen::Index b) { return d[a] < d[b]; });

  Spectrum spectrum;
  spectrum.eigenvalues.resize(n);
  spectrum.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    spectrum.eigenvalues[k] = d[order[static_cast<std::size_t>(k)]];
    spectrum.eigenvectors.col(k) = z.col(order[static_cast<std::size_t>(k)]);
    fix_sign(spectrum.eigenvectors.col(k));
  }

  localize_degenerate_clusters(spectrum);
  return spectrum;
}

Eigen::VectorXd sturm_eigenvalues(const Hamiltonian& h, double tol) {
  if (h.corner) throw std::invalid_argument("Sturm bisection requires an open chain");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  return bisect_eigenvalues<double>(h.diagonal, h.offdiagonal, tol);
}

std::vector<std::pair<double, int>> degeneracy_census(const Spectrum& spectrum,
                                                      double tol) {
  std::vector<std::pair<double, int>> clusters;
  const Eigen::Index n = spectrum.size();
  Eigen::Index lo = 0;
  while (lo < n) {
    Eigen::Index hi = lo + 1;
    while (hi < n && spectrum.eigenvalues[hi] - spectrum.eigenvalues[hi - 1] <= tol) ++hi;
    clusters.emplace_back(spectrum.eigenvalues.segment(lo, hi - lo).mean(),
                          static_cast<int>(hi - lo));
    lo = hi;
  }
  return clusters;
}

}  // namespace lsd
