#include "lsd/sweep.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lsd/errors.hpp"

namespace lsd {

namespace {

Chain distinct_seed(int n) {
  std::vector<Symbol> symbols;
  symbols.reserve(static_cast<std::size_t>(n));
  for (int id = 0; id < n; ++id) symbols.push_back(Symbol{id});
  return Chain(std::move(symbols));
}

}  // namespace

SweepRecord sweep_cell(const LsdRule& rule) {
  validate(rule);
  const Chain seed = distinct_seed(rule.major);
  const PeriodicityReport report = detect_stable(seed, rule);
  const Prediction prediction = predict(rule);

  SweepRecord record;
  record.n = rule.major;
  record.m = rule.minor;
  record.seed_length = seed.size();
  record.transient = report.transient;
  record.period = report.period;
  record.structural_period = prediction.structural_period;
  record.distinct_symbols = report.distinct_tail_symbols;
  record.predicted_distinct = prediction.distinct_symbols;
  record.period_divides_structural =
      record.period != 0 &&
      static_cast<std::size_t>(record.structural_period) % record.period == 0;
  record.distinct_matches_predicted =
      record.distinct_symbols == record.predicted_distinct;
  return record;
}

nlohmann::ordered_json to_json(const SweepRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["seed_length"] = r.seed_length;
  j["transient"] = r.transient;
  j["period"] = r.period;
  j["structural_period"] = r.structural_period;
  j["distinct_symbols"] = r.distinct_symbols;
  j["predicted_distinct"] = r.predicted_distinct;
  j["period_divides_structural"] = r.period_divides_structural;
  j["distinct_matches_predicted"] = r.distinct_matches_predicted;
  return j;
}

SweepRecord sweep_record_from_json(const nlohmann::json& j) {
  SweepRecord r;
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.seed_length = j.at("seed_length").get<std::size_t>();
  r.transient = j.at("transient").get<std::size_t>();
  r.period = j.at("period").get<std::size_t>();
  r.structural_period = j.at("structural_period").get<int>();
  r.distinct_symbols = j.at("distinct_symbols").get<int>();
  r.predicted_distinct = j.at("predicted_distinct").get<int>();
  r.period_divides_structural = j.at("period_divides_structural").get<bool>();
  r.distinct_matches_predicted = j.at("distinct_matches_predicted").get<bool>();
  return r;
}

std::vector<SweepRecord> run_sweep(int n_min, int n_max,
                                   const std::filesystem::path& out_path) {
  // Collect cells already on disk; unparseable lines (e.g. a truncated tail
  // from an interrupted run) are ignored and their cells recomputed.
  std::set<std::pair<int, int>> done;
  bool needs_newline = false;
  if (std::filesystem::exists(out_path)) {
    std::ifstream in(out_path);
    if (!in) throw IoError("cannot open for reading: " + out_path.string());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        const SweepRecord r = sweep_record_from_json(nlohmann::json::parse(line));
        done.emplace(r.n, r.m);
      } catch (const nlohmann::json::exception&) {
      }
    }
    // A torn tail line (no trailing newline) must not swallow the next record.
    in.clear();
    in.seekg(0, std::ios::end);
    if (in.tellg() > 0) {
      in.seekg(-1, std::ios::end);
      char last = '\n';
      in.get(last);
      needs_newline = last != '\n';
    }
  }

  std::ofstream out(out_path, std::ios::app);
  if (!out) throw IoError("cannot open for appending: " + out_path.string());
  if (needs_newline) out << '\n';

  std::vector<SweepRecord> written;
  for (int n = n_min; n <= n_max; ++n) {
    for (int m = 1; m < n; ++m) {
      if (done.count({n, m})) continue;
      const SweepRecord record = sweep_cell(LsdRule{n, m});
      out << to_json(record).dump() << '\n';
      out.flush();
      if (!out) throw IoError("write failed: " + out_path.string());
      written.push_back(record);
    }
  }
  return written;
}

}  // namespace lsd
