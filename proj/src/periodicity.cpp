#include "lsd/periodicity.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "lsd/errors.hpp"

namespace lsd {

namespace {

// Z-array: z[i] = length of the longest common prefix of s and s[i..].
std::vector<std::size_t> z_array(const std::vector<Symbol>& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

int distinct_count(const Chain& chain) {
  std::set<int> ids;
  for (Symbol s : chain.symbols()) ids.insert(s.id);
  return static_cast<int>(ids.size());
}

// Every (period, onset) pair admitting two visible repetitions, ascending in
// period. The end of a finite chain can mimic a short period, but such
// artifacts sit at a length-dependent onset, which is how detect_stable
// tells them from the true eventual period.
std::vector<std::pair<std::size_t, std::size_t>> periodicity_candidates(const Chain& chain) {
  const std::size_t n = chain.size();
  std::vector<Symbol> reversed(chain.symbols().rbegin(), chain.symbols().rend());
  const std::vector<std::size_t> match = z_array(reversed);

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t p = 1; 2 * p <= n; ++p)
    if (match[p] >= p) candidates.emplace_back(p, n - p - match[p]);
  return candidates;
}

PeriodicityReport report_at(const Chain& chain, std::size_t period, std::size_t onset) {
  Chain cell(std::vector<Symbol>(chain.symbols().begin() + onset,
                                 chain.symbols().begin() + onset + period));
  PeriodicityReport report;
  report.transient = onset;
  report.period = period;
  report.distinct_tail_symbols = distinct_count(cell);
  report.unit_cell = std::move(cell);
  return report;
}

}  // namespace

PeriodicityReport detect_periodicity(const Chain& chain) {
  if (chain.empty()) throw std::invalid_argument("cannot detect periodicity of an empty chain");

  // For period p, the longest p-periodic suffix has onset t = n - p - M(p)
  // where M(p) is the longest common suffix of the chain and the chain with
  // its last p symbols dropped (a Z-array of the reversed chain). Two
  // repetitions are visible exactly when M(p) >= p; the smallest such p
  // wins and its onset is already minimal.
  const auto candidates = periodicity_candidates(chain);
  if (candidates.empty()) throw DetectionError("chain too short for detection");
  return report_at(chain, candidates.front().first, candidates.front().second);
}

PeriodicityReport detect_stable(const Chain& seed, const LsdRule& rule,
                                int max_doublings) {
  validate(rule);
  const std::size_t span = static_cast<std::size_t>(rule.major + rule.minor);
  std::size_t target = std::max(seed.size(), 8 * span * span);

  // A true eventual period keeps its onset when the chain grows, while the
  // mimics produced by the cut at the chain end drift with the length, so
  // the smallest candidate unchanged across a doubling is the real one.
  // Generation is deterministic, so equal (period, onset) pairs imply equal
  // unit cells as well.
  std::vector<std::pair<std::size_t, std::size_t>> previous;
  for (int attempt = 0; attempt <= max_doublings; ++attempt, target *= 2) {
    const Chain chain = generate(seed, rule, target);
    std::vector<std::pair<std::size_t, std::size_t>> current = periodicity_candidates(chain);
    auto p = previous.begin();
    for (const auto& candidate : current) {
      while (p != previous.end() && p->first < candidate.first) ++p;
      if (p != previous.end() && *p == candidate)
        return report_at(chain, candidate.first, candidate.second);
    }
    previous = std::move(current);
  }
  throw DetectionError("no stable periodicity found");
}

Prediction predict(const LsdRule& rule) {
  validate(rule);
  const int n = rule.major;
  const int m = rule.minor;

  Prediction out;
  out.structural_period = 2 * (n + m);
  out.distinct_symbols = n - m;
  out.transient_order = n * n;

  // Branching ratios p/(p+1)*n passed on the way to the given m. The ratio
  // increases with p and approaches n, so both lists are finite. Compared in
  // integers to keep the boundary case p*n == m*(p+1) exact.
  int last_strict = 0;
  for (int p = 1;; ++p) {
    const double ratio = static_cast<double>(p) * n / (p + 1);
    const bool strict = p * n < m * (p + 1);
    const bool inclusive = p * n <= m * (p + 1);
    if (!inclusive) break;
    out.branching_path_inclusive.push_back(ratio);
    if (strict) {
      out.branching_path.push_back(ratio);
      last_strict = p;
    }
  }
  out.formula_transient = 2 * (n + m * last_strict + m);
  return out;
}

std::vector<CensusEntry> symbol_census(const Chain& chain) {
  if (chain.empty()) throw std::invalid_argument("cannot census an empty chain");

  std::vector<CensusEntry> entries;
  if (chain.axes().empty()) {
    entries.push_back(CensusEntry{chain.size(), distinct_count(chain)});
    return entries;
  }

  std::size_t major = 0, minor = chain.size();
  for (const ReflectionAxis& a : chain.axes()) {
    if (a.size == 0) continue;
    major = std::max(major, a.size);
    minor = std::min(minor, a.size);
  }
  const std::size_t window = major ? 2 * (major + minor) : chain.size();

  for (const ReflectionAxis& a : chain.axes()) {
    const std::size_t lo = a.position > window ? a.position - window : 0;
    std::set<int> ids;
    for (std::size_t i = lo; i < a.position; ++i) ids.insert(chain[i].id);
    entries.push_back(CensusEntry{a.position, static_cast<int>(ids.size())});
  }
  return entries;
}

Chain generate_cells(const Chain& seed, const LsdRule& rule, int cells) {
  if (cells < 1) throw std::invalid_argument("cell count must be positive");
  const PeriodicityReport report = detect_stable(seed, rule);
  const std::size_t length = report.transient + static_cast<std::size_t>(cells) * report.period;
  return prefix(generate(seed, rule, std::max(length, seed.size())), length);
}

}  // namespace lsd
