#pragma once

#include <cstddef>
#include <vector>

#include "lsd/chain.hpp"

namespace lsd {

/// Maximal palindromic substring: `extent` symbols reading the same forward
/// and backward about `center`. Centers are half-integers; x.5 lies between
/// sites x and x+1 (even extent), integers sit on a site (odd extent).
struct ReflectionDomain {
  double center = 0.0;
  std::size_t extent = 0;

  std::size_t first_site() const;
  std::size_t last_site() const;

  friend bool operator==(const ReflectionDomain&, const ReflectionDomain&) = default;
};

/// Maximal periodic run: starting at `start`, symbols repeat with primitive
/// period `block_length` for `repetitions` full blocks.
struct TranslationDomain {
  std::size_t start = 0;
  std::size_t block_length = 0;
  std::size_t repetitions = 0;

  friend bool operator==(const TranslationDomain&, const TranslationDomain&) = default;
};

enum class CoverageClass { complete, non_gapped, gapped };

/// Half-open index interval [begin, end).
struct SiteInterval {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const SiteInterval&, const SiteInterval&) = default;
};

struct CoverageReport {
  double covered_fraction = 0.0;
  CoverageClass classification = CoverageClass::gapped;
  std::vector<SiteInterval> gaps;
};

/// All maximal palindromic substrings of extent >= min_extent, both on-site
/// and between-site centers, sorted by center.
std::vector<ReflectionDomain> palindromic_domains(const Chain& chain,
                                                  std::size_t min_extent = 4);

/// All maximal periodic runs with primitive block length >= min_block and at
/// least min_repetitions full blocks, sorted by (start, block_length).
std::vector<TranslationDomain> translation_domains(const Chain& chain,
                                                   std::size_t min_block = 1,
                                                   std::size_t min_repetitions = 2);

/// Union of the domain site intervals measured against the chain length.
/// complete: everything covered; non_gapped: uncovered sites only at the
/// chain ends; gapped: uncovered space between domains (or no domains).
CoverageReport coverage(const Chain& chain,
                        const std::vector<ReflectionDomain>& domains);

const char* to_string(CoverageClass c);

}  // namespace lsd
