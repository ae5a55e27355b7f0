#include "lsd/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsd {

std::vector<StateProfile> profile_states(const Spectrum& spectrum) {
  const Eigen::Index n = spectrum.size();
  const Eigen::Index edge = (n + 9) / 10;  // ceil(N/10)

  std::vector<StateProfile> profiles;
  profiles.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto state = spectrum.eigenvectors.col(k);
    StateProfile p;
    p.state_index = static_cast<int>(k);
    p.eigenvalue = spectrum.eigenvalues[k];
    p.center = localization_center(state);
    p.spread = lsd::spread(state);
    p.participation_ratio = lsd::participation_ratio(state);

    const double left = state.head(edge).squaredNorm();
    const double right = state.tail(edge).squaredNorm();
    if (2 * edge <= n)
      p.edge_weight = left + right;
    else  // windows overlap on very short chains; count the union once
      p.edge_weight = std::min(left + right, state.squaredNorm());
    p.edge_side = left >= right ? EdgeSide::left : EdgeSide::right;
    profiles.push_back(p);
  }
  return profiles;
}

std::vector<EdgeState> classify_edge_states(const std::vector<StateProfile>& profiles,
                                            double threshold) {
  if (threshold <= 0.0 || threshold >= 1.0)
    throw std::invalid_argument("edge threshold must lie in (0,1)");
  std::vector<EdgeState> edges;
  for (const StateProfile& p : profiles)
    if (p.edge_weight >= threshold)
      edges.push_back(EdgeState{p.state_index, p.edge_side});
  return edges;
}

EigenstateMap render_eigenmap(const Spectrum& spectrum) {
  EigenstateMap map;
  map.grid = spectrum.eigenvectors.transpose().cwiseAbs();
  map.normalization = map.grid.maxCoeff();
  if (map.normalization > 0.0) map.grid /= map.normalization;
  return map;
}

std::vector<CouplingSummary> compare_couplings(const Chain& chain,
                                               const std::vector<double>& couplings,
                                               const TbParams& base) {
  if (couplings.empty()) throw std::invalid_argument("no couplings given");

  std::vector<CouplingSummary> rows;
  rows.reserve(couplings.size());
  for (double c : couplings) {
    TbParams params = base;
    params.coupling = c;
    const Spectrum spectrum = eigendecompose(build_hamiltonian(chain, params));
    const Eigen::Index n = spectrum.size();
    const Eigen::Index lo = n / 3;
    const Eigen::Index hi = std::max(lo + 1, 2 * n / 3);

    std::vector<double> prs;
    prs.reserve(static_cast<std::size_t>(hi - lo));
    for (Eigen::Index k = lo; k < hi && k < n; ++k)
      prs.push_back(participation_ratio(spectrum.eigenvectors.col(k)));
    std::sort(prs.begin(), prs.end());
    const std::size_t mid = prs.size() / 2;
    const double median = prs.size() % 2 ? prs[mid] : 0.5 * (prs[mid - 1] + prs[mid]);
    rows.push_back(CouplingSummary{c, median});
  }
  return rows;
}

const char* to_string(EdgeSide side) {
  return side == EdgeSide::left ? "left" : "right";
}

}  // namespace lsd
