#pragma once

#include <Eigen/Core>

#include <cmath>
#include <vector>

#include "lsd/chain.hpp"
#include "lsd/tight_binding.hpp"

namespace lsd {

// Per-state localization measures over any normalized amplitude vector.
// These accept arbitrary Eigen expressions; sites are indexed 0..N-1.

template <typename Derived>
double localization_center(const Eigen::MatrixBase<Derived>& state) {
  const Eigen::Index n = state.size();
  const auto weights = state.derived().array().square();
  return (weights * Eigen::ArrayXd::LinSpaced(n, 0.0, double(n - 1))).sum();
}

template <typename Derived>
double spread(const Eigen::MatrixBase<Derived>& state) {
  const Eigen::Index n = state.size();
  const auto weights = state.derived().array().square();
  const double center = (weights * Eigen::ArrayXd::LinSpaced(n, 0.0, double(n - 1))).sum();
  const double variance =
      (weights * (Eigen::ArrayXd::LinSpaced(n, 0.0, double(n - 1)) - center).square()).sum();
  return std::sqrt(std::max(variance, 0.0));
}

/// 1 / sum |psi_i|^4: 1 for a single-site state, N for a uniform one.
template <typename Derived>
double participation_ratio(const Eigen::MatrixBase<Derived>& state) {
  return 1.0 / state.derived().array().square().square().sum();
}

enum class EdgeSide { left, right };

struct StateProfile {
  int state_index = 0;
  double eigenvalue = 0.0;
  double center = 0.0;
  double spread = 0.0;
  double participation_ratio = 0.0;
  double edge_weight = 0.0;  // |psi|^2 on the outer ceil(N/10) sites per side
  EdgeSide edge_side = EdgeSide::left;
};

/// Amplitude magnitudes |psi_k(i)| over states (rows, ascending energy) and
/// sites (columns), normalized by the global maximum.
struct EigenstateMap {
  Eigen::MatrixXd grid;
  double normalization = 0.0;
};

struct CouplingSummary {
  double coupling = 0.0;
  double median_mid_pr = 0.0;  // median PR over the middle third of the spectrum
};

std::vector<StateProfile> profile_states(const Spectrum& spectrum);

struct EdgeState {
  int state_index = 0;
  EdgeSide side = EdgeSide::left;
  friend bool operator==(const EdgeState&, const EdgeState&) = default;
};

/// States whose edge weight reaches `threshold`, annotated with the
/// dominating side.
std::vector<EdgeState> classify_edge_states(const std::vector<StateProfile>& profiles,
                                            double threshold = 0.5);

EigenstateMap render_eigenmap(const Spectrum& spectrum);

/// Diagonalizes the chain once per coupling value and reports the median
/// participation ratio over the middle third of each spectrum.
std::vector<CouplingSummary> compare_couplings(const Chain& chain,
                                               const std::vector<double>& couplings,
                                               const TbParams& base = {});

const char* to_string(EdgeSide side);

}  // namespace lsd
