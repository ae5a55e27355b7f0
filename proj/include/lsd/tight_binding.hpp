#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lsd/chain.hpp"

namespace lsd {

enum class Boundary { open, periodic };

/// Mapping from the symbolic code to matrix entries: per-symbol on-site
/// energies, one uniform nearest-neighbor coupling, and the boundary
/// condition. The default map assigns A..G the energies 1..7.
struct TbParams {
  std::map<int, double> onsite = default_onsite();
  double coupling = 1.0;
  Boundary boundary = Boundary::open;

  static std::map<int, double> default_onsite();
};

/// Real symmetric chain Hamiltonian: on-site energies on the diagonal, the
/// uniform coupling on the first off-diagonal, and for periodic boundaries
/// the corner entry closing the ring.
struct Hamiltonian {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd offdiagonal;  // size N-1
  std::optional<double> corner;

  Eigen::Index size() const { return diagonal.size(); }
  Eigen::MatrixXd dense() const;
};

/// Full eigensystem, eigenvalues ascending, eigenvector k in column k.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  Eigen::Index size() const { return eigenvalues.size(); }
};

Hamiltonian build_hamiltonian(const Chain& chain, const TbParams& params = {});

/// Full eigendecomposition. Open chains go through implicit-shift QL on the
/// tridiagonal form directly; periodic chains are Householder-reduced first.
/// Eigenvectors carry a fixed sign convention (first component of magnitude
/// above 1e-12 is positive); inside numerically degenerate clusters the basis
/// is rotated to diagonalize the site position, giving maximally localized
/// representatives ordered by ascending localization center, so state indices
/// and maps are reproducible.
Spectrum eigendecompose(const Hamiltonian& h);

/// Independent eigenvalue route for open chains: Sturm-count bisection,
/// each eigenvalue bracketed to width <= tol. Ascending.
Eigen::VectorXd sturm_eigenvalues(const Hamiltonian& h, double tol);

/// Groups eigenvalues lying within tol of their neighbors and reports each
/// cluster as (mean eigenvalue, multiplicity).
std::vector<std::pair<double, int>> degeneracy_census(const Spectrum& spectrum,
                                                      double tol);

}  // namespace lsd
