#pragma once

#include <cstddef>
#include <vector>

#include "lsd/chain.hpp"

namespace lsd {

/// Empirical description of an eventually periodic chain: the first
/// `transient` symbols (seed included) precede a tail of minimal period
/// `period` whose repeating block is `unit_cell`.
struct PeriodicityReport {
  std::size_t transient = 0;
  std::size_t period = 0;
  Chain unit_cell;
  int distinct_tail_symbols = 0;

  friend bool operator==(const PeriodicityReport& a, const PeriodicityReport& b) {
    return a.transient == b.transient && a.period == b.period &&
           a.unit_cell == b.unit_cell;
  }
};

/// Structural quantities implied by the rule alone, before generating
/// anything. `structural_period` is the built unit-cell length 2(n+m), of
/// which the observed minimal period is a divisor; `distinct_symbols` is the
/// surviving alphabet n-m; `transient_order` is the n^2 scale of the
/// transient. `branching_path` lists the ratios p/(p+1)*n strictly below
/// minor; the inclusive variant admits equality, since which reading applies
/// at an exact hit is convention. `formula_transient` is 2(n + m*p + m) for
/// the last strict branching index p; it is counted from the branching
/// points, a different convention from PeriodicityReport::transient, and the
/// two need not agree.
struct Prediction {
  int structural_period = 0;
  int distinct_symbols = 0;
  int transient_order = 0;
  std::vector<double> branching_path;
  std::vector<double> branching_path_inclusive;
  int formula_transient = 0;
};

/// Finds the smallest period p such that some suffix of the chain is
/// p-periodic with at least two full repetitions visible, and the earliest
/// onset t for that p. Throws DetectionError when no such suffix exists;
/// the caller should regenerate longer. Note that the end of a finite chain
/// can mimic a short period; detect_stable() filters such artifacts.
PeriodicityReport detect_periodicity(const Chain& chain);

/// Generates the chain at doubling lengths starting from 8*(n+m)^2 and
/// accepts the first report that is identical across two consecutive
/// doublings. Throws DetectionError after `max_doublings` unsuccessful
/// doublings.
PeriodicityReport detect_stable(const Chain& seed, const LsdRule& rule,
                                int max_doublings = 10);

Prediction predict(const LsdRule& rule);

struct CensusEntry {
  std::size_t prefix_length = 0;
  int distinct_symbols = 0;
  friend constexpr bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// For every recorded axis, the number of distinct symbols in the window of
/// one structural period ending at that axis (clamped at the chain start).
/// The window size is inferred from the recorded reflection sizes; a chain
/// with no axes yields a single whole-chain entry.
std::vector<CensusEntry> symbol_census(const Chain& chain);

/// The standard truncation for spectral runs: transient plus `cells` unit
/// cells, via detect_stable.
Chain generate_cells(const Chain& seed, const LsdRule& rule, int cells = 3);

}  // namespace lsd
