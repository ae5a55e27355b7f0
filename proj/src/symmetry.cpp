#include "lsd/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lsd {

std::size_t ReflectionDomain::first_site() const {
  const long twice = std::lround(2.0 * center);
  return static_cast<std::size_t>((twice + 1 - static_cast<long>(extent)) / 2);
}

std::size_t ReflectionDomain::last_site() const {
  const long twice = std::lround(2.0 * center);
  return static_cast<std::size_t>((twice - 1 + static_cast<long>(extent)) / 2);
}

std::vector<ReflectionDomain> palindromic_domains(const Chain& chain,
                                                  std::size_t min_extent) {
  if (chain.empty()) throw std::invalid_argument("cannot scan an empty chain");
  if (min_extent < 2) min_extent = 2;

  // Manacher over the gap-augmented sequence t = [#, s0, #, s1, ..., #]:
  // the radius at augmented position q equals the palindrome extent about
  // the chain position (q-1)/2.
  const std::vector<Symbol>& s = chain.symbols();
  const std::size_t n = s.size();
  const std::size_t an = 2 * n + 1;
  std::vector<int> t(an, -1);
  for (std::size_t i = 0; i < n; ++i) t[2 * i + 1] = s[i].id;

  std::vector<std::size_t> radius(an, 0);
  std::size_t center = 0, border = 0;
  for (std::size_t q = 1; q < an; ++q) {
    if (q < border) radius[q] = std::min(border - q, radius[2 * center - q]);
    while (q + radius[q] + 1 < an && q >= radius[q] + 1 &&
           t[q - radius[q] - 1] == t[q + radius[q] + 1])
      ++radius[q];
    if (q + radius[q] > border) {
      center = q;
      border = q + radius[q];
    }
  }

  std::vector<ReflectionDomain> domains;
  for (std::size_t q = 1; q + 1 < an; ++q) {
    const std::size_t extent = radius[q];
    if (extent < min_extent) continue;
    domains.push_back(ReflectionDomain{(static_cast<double>(q) - 1.0) / 2.0, extent});
  }
  return domains;
}

namespace {

// Whether chain[begin, end) repeats with period d.
bool interval_periodic(const std::vector<Symbol>& s, std::size_t begin,
                       std::size_t end, std::size_t d) {
  for (std::size_t i = begin; i + d < end; ++i)
    if (s[i] != s[i + d]) return false;
  return true;
}

}  // namespace

std::vector<TranslationDomain> translation_domains(const Chain& chain,
                                                   std::size_t min_block,
                                                   std::size_t min_repetitions) {
  if (chain.empty()) throw std::invalid_argument("cannot scan an empty chain");
  min_block = std::max<std::size_t>(min_block, 1);
  min_repetitions = std::max<std::size_t>(min_repetitions, 2);

  const std::vector<Symbol>& s = chain.symbols();
  const std::size_t n = s.size();

  std::vector<TranslationDomain> domains;
  for (std::size_t b = 1; 2 * b <= n; ++b) {
    // Maximal stretches of chain[x] == chain[x+b] give the maximal runs of
    // period b; a stretch of length L yields a run spanning L + b symbols.
    std::size_t x = 0;
    while (x + b < n) {
      if (s[x] != s[x + b]) {
        ++x;
        continue;
      }
      std::size_t y = x;
      while (y + b < n && s[y] == s[y + b]) ++y;
      const std::size_t begin = x, end = y + b;  // run interval [begin, end)
      x = y + 1;
      const std::size_t reps = (end - begin) / b;
      if (reps < 2) continue;

      // Keep only primitive periods: a run whose interval already repeats
      // with a proper divisor of b belongs to that smaller block length.
      bool primitive = true;
      for (std::size_t d = 1; d < b && primitive; ++d)
        if (b % d == 0 && interval_periodic(s, begin, end, d)) primitive = false;
      if (!primitive) continue;

      if (b >= min_block && reps >= min_repetitions)
        domains.push_back(TranslationDomain{begin, b, reps});
    }
  }
  std::sort(domains.begin(), domains.end(),
            [](const TranslationDomain& a, const TranslationDomain& b) {
              return a.start != b.start ? a.start < b.start
                                        : a.block_length < b.block_length;
            });
  return domains;
}

CoverageReport coverage(const Chain& chain,
                        const std::vector<ReflectionDomain>& domains) {
  const std::size_t n = chain.size();
  std::vector<SiteInterval> intervals;
  intervals.reserve(domains.size());
  for (const ReflectionDomain& d : domains) {
    if (d.extent == 0) continue;
    const std::size_t lo = d.first_site();
    const std::size_t hi = d.last_site() + 1;
    if (hi > n) throw std::invalid_argument("domain exceeds chain bounds");
    intervals.push_back(SiteInterval{lo, hi});
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const SiteInterval& a, const SiteInterval& b) {
              return a.begin != b.begin ? a.begin < b.begin : a.end < b.end;
            });

  CoverageReport report;
  std::size_t covered = 0;
  std::size_t cursor = 0;  // end of the covered region so far
  bool interior_gap = false;
  for (const SiteInterval& iv : intervals) {
    if (iv.begin > cursor) {
      report.gaps.push_back(SiteInterval{cursor, iv.begin});
      if (cursor > 0) interior_gap = true;
    }
    if (iv.end > cursor) {
      covered += iv.end - std::max(iv.begin, cursor);
      cursor = iv.end;
    }
  }
  if (cursor < n) report.gaps.push_back(SiteInterval{cursor, n});

  report.covered_fraction = n ? static_cast<double>(covered) / static_cast<double>(n) : 0.0;
  if (intervals.empty())
    report.classification = CoverageClass::gapped;
  else if (covered == n)
    report.classification = CoverageClass::complete;
  else if (interior_gap)
    report.classification = CoverageClass::gapped;
  else
    report.classification = CoverageClass::non_gapped;
  return report;
}

const char* to_string(CoverageClass c) {
  switch (c) {
    case CoverageClass::complete: return "complete";
    case CoverageClass::non_gapped: return "non-gapped";
    case CoverageClass::gapped: return "gapped";
  }
  return "?";
}

}  // namespace lsd
