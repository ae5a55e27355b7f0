#pragma once

#include <filesystem>
#include <vector>

#include "json.hpp"

#include "lsd/chain.hpp"
#include "lsd/periodicity.hpp"

namespace lsd {

/// One grid cell of an n:m rule survey: the stably detected transient and
/// period plus the structural expectations, with agreement flags derived
/// from the other fields.
struct SweepRecord {
  int n = 0;
  int m = 0;
  std::size_t seed_length = 0;
  std::size_t transient = 0;
  std::size_t period = 0;
  int structural_period = 0;
  int distinct_symbols = 0;   // observed in the unit cell
  int predicted_distinct = 0; // n - m
  bool period_divides_structural = false;
  bool distinct_matches_predicted = false;
};

SweepRecord sweep_cell(const LsdRule& rule);

nlohmann::ordered_json to_json(const SweepRecord& record);
SweepRecord sweep_record_from_json(const nlohmann::json& j);

/// Surveys every rule n:m with n_min <= n <= n_max and 1 <= m < n against a
/// seed of n distinct symbols, appending one JSON line per cell to
/// `out_path` in lexicographic (n, m) order. Cells already present in the
/// file are skipped, so an interrupted run can resume. Returns the records
/// written by this call.
std::vector<SweepRecord> run_sweep(int n_min, int n_max,
                                   const std::filesystem::path& out_path);

}  // namespace lsd
