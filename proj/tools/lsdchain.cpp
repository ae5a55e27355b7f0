// Command-line front end: chain generation, periodicity detection and
// prediction, symmetry scanning, tight-binding spectra, eigenstate maps, and
// rule-grid sweeps.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lsd/analysis.hpp"
#include "lsd/chain.hpp"
#include "lsd/errors.hpp"
#include "lsd/io.hpp"
#include "lsd/periodicity.hpp"
#include "lsd/sweep.hpp"
#include "lsd/symmetry.hpp"
#include "lsd/tight_binding.hpp"

namespace {

lsd::LsdRule parse_rule(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("rule must have the form n:m, got '" + text + "'");
  lsd::LsdRule rule;
  try {
    rule.major = std::stoi(text.substr(0, colon));
    rule.minor = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("rule must have the form n:m, got '" + text + "'");
  }
  lsd::validate(rule);
  return rule;
}

lsd::Chain default_seed(const lsd::LsdRule& rule) {
  std::vector<lsd::Symbol> symbols;
  for (int id = 0; id < rule.major; ++id) symbols.push_back(lsd::Symbol{id});
  return lsd::Chain(std::move(symbols));
}

int symbol_id(const std::string& token) {
  if (token.size() == 1 && token[0] >= 'A' && token[0] <= 'Z') return token[0] - 'A';
  try {
    return std::stoi(token);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad symbol '" + token + "' in on-site map");
  }
}

std::map<int, double> parse_onsite(const std::string& text) {
  std::map<int, double> map;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("on-site map entries must be SYMBOL=VALUE, got '" + item + "'");
    map[symbol_id(item.substr(0, eq))] = std::stod(item.substr(eq + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (map.empty()) throw std::invalid_argument("empty on-site map");
  return map;
}

lsd::Boundary parse_boundary(const std::string& text) {
  if (text == "open") return lsd::Boundary::open;
  if (text == "periodic") return lsd::Boundary::periodic;
  throw std::invalid_argument("boundary must be open or periodic, got '" + text + "'");
}

// Shared --onsite/--coupling/--bc/--config options for the spectral
// subcommands. Precedence: explicit flags, then config file, then defaults.
struct SpectralOptions {
  std::string onsite_flag;
  double coupling_flag = 0.0;
  bool coupling_set = false;
  std::string boundary_flag;
  std::string config_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--onsite", onsite_flag,
                    "on-site energies, e.g. A=1,B=2 (default A..G -> 1..7)");
    cmd->add_option("--coupling", coupling_flag, "nearest-neighbor coupling (default 1)")
        ->each([this](const std::string&) { coupling_set = true; });
    cmd->add_option("--bc", boundary_flag, "boundary condition: open|periodic (default open)");
    cmd->add_option("--config", config_path, "JSON config file with onsite/coupling/boundary");
  }

  lsd::TbParams resolve() const {
    lsd::TbParams params;
    if (!config_path.empty()) {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(lsd::read_text_file(config_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed config " + config_path + ": " + e.what());
      }
      if (doc.contains("onsite")) {
        std::map<int, double> map;
        for (const auto& [key, value] : doc.at("onsite").items())
          map[symbol_id(key)] = value.get<double>();
        params.onsite = std::move(map);
      }
      if (doc.contains("coupling")) params.coupling = doc.at("coupling").get<double>();
      if (doc.contains("boundary"))
        params.boundary = parse_boundary(doc.at("boundary").get<std::string>());
    }
    if (!onsite_flag.empty()) params.onsite = parse_onsite(onsite_flag);
    if (coupling_set) params.coupling = coupling_flag;
    if (!boundary_flag.empty()) params.boundary = parse_boundary(boundary_flag);
    return params;
  }
};

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::fwrite(content.data(), 1, content.size(), stdout);
  else
    lsd::write_text_file(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local symmetry dynamics chains: generation, detection, spectra"};
  app.require_subcommand(1);

  std::string rule_text, seed_text, out_path, chain_path;

  // generate
  auto* generate = app.add_subcommand("generate", "grow a chain and write it with its axes sidecar");
  std::size_t gen_length = 0;
  int gen_cells = 0;
  bool gen_exact = false;
  generate->add_option("--rule", rule_text, "n:m rule")->required();
  generate->add_option("--seed", seed_text, "seed text (default: n distinct symbols)");
  auto* len_opt = generate->add_option("--length", gen_length, "grow until at least this many symbols");
  auto* cells_opt = generate->add_option("--cells", gen_cells, "grow to transient plus this many unit cells")
                        ->excludes(len_opt);
  generate->add_flag("--exact", gen_exact, "truncate to exactly --length symbols");
  generate->add_option("--out", out_path, "chain file (stdout if omitted)");
  generate->callback([&] {
    const lsd::LsdRule rule = parse_rule(rule_text);
    const lsd::Chain seed =
        seed_text.empty() ? default_seed(rule) : lsd::Chain::from_string(seed_text);
    lsd::Chain chain;
    if (cells_opt->count() > 0) {
      chain = lsd::generate_cells(seed, rule, gen_cells);
    } else {
      if (len_opt->count() == 0) throw std::invalid_argument("need --length or --cells");
      chain = lsd::generate(seed, rule, gen_length);
      if (gen_exact) chain = lsd::prefix(chain, gen_length);
    }
    if (out_path.empty())
      emit(lsd::to_string(chain) + "\n", "");
    else
      lsd::write_chain(chain, out_path);
  });

  // detect
  auto* detect = app.add_subcommand("detect", "stable transient/period report for a rule");
  int max_doublings = 10;
  detect->add_option("--rule", rule_text, "n:m rule")->required();
  detect->add_option("--seed", seed_text, "seed text (default: n distinct symbols)");
  detect->add_option("--max-doublings", max_doublings, "doubling cap (default 10)");
  detect->add_option("--out", out_path, "output JSON path (stdout if omitted)");
  detect->callback([&] {
    const lsd::LsdRule rule = parse_rule(rule_text);
    const lsd::Chain seed =
        seed_text.empty() ? default_seed(rule) : lsd::Chain::from_string(seed_text);
    const lsd::PeriodicityReport report = lsd::detect_stable(seed, rule, max_doublings);
    emit(lsd::to_json(report).dump(2) + "\n", out_path);
  });

  // predict
  auto* predict = app.add_subcommand("predict", "structural period and symbol count for a rule");
  predict->add_option("--rule", rule_text, "n:m rule")->required();
  predict->add_option("--out", out_path, "output JSON path (stdout if omitted)");
  predict->callback([&] {
    emit(lsd::to_json(lsd::predict(parse_rule(rule_text))).dump(2) + "\n", out_path);
  });

  // scan
  auto* scan = app.add_subcommand("scan", "reflection and translation domains of a chain file");
  std::size_t min_extent = 4, min_block = 1, min_reps = 2;
  std::string format = "json";
  bool with_coverage = false;
  scan->add_option("chain", chain_path, "chain file")->required();
  scan->add_option("--min-extent", min_extent, "minimum palindrome extent (default 4)");
  scan->add_option("--min-block", min_block, "minimum translation block (default 1)");
  scan->add_option("--min-reps", min_reps, "minimum repetitions (default 2)");
  scan->add_option("--format", format, "json|csv (default json)");
  scan->add_flag("--coverage", with_coverage,
                 "report reflection-domain coverage instead of the domain list");
  scan->add_option("--out", out_path, "output path (stdout if omitted)");
  scan->callback([&] {
    const lsd::Chain chain = lsd::read_chain(chain_path);
    const auto reflections = lsd::palindromic_domains(chain, min_extent);
    if (with_coverage) {
      emit(lsd::to_json(lsd::coverage(chain, reflections)).dump(2) + "\n", out_path);
      return;
    }
    const auto translations = lsd::translation_domains(chain, min_block, min_reps);
    if (format == "json")
      emit(lsd::domains_to_json(reflections, translations).dump(2) + "\n", out_path);
    else if (format == "csv")
      emit(lsd::domains_to_csv(reflections, translations), out_path);
    else
      throw std::invalid_argument("format must be json or csv");
  });

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue CSV for a chain file");
  SpectralOptions spectral;
  std::string vectors_path;
  spectrum->add_option("chain", chain_path, "chain file")->required();
  spectral.attach(spectrum);
  spectrum->add_option("--out", out_path, "spectrum CSV path (stdout if omitted)");
  spectrum->add_option("--eigenvectors", vectors_path,
                       "also write the eigenvector matrix CSV (row = state)");
  spectrum->callback([&] {
    const lsd::Spectrum s = lsd::eigendecompose(
        lsd::build_hamiltonian(lsd::read_chain(chain_path), spectral.resolve()));
    emit(lsd::spectrum_to_csv(s), out_path);
    if (!vectors_path.empty()) lsd::write_text_file(vectors_path, lsd::eigenvectors_to_csv(s));
  });

  // eigenmap
  auto* eigenmap = app.add_subcommand("eigenmap", "grayscale eigenstate map (PGM) for a chain file");
  SpectralOptions map_spectral;
  std::string csv_path, profiles_path;
  eigenmap->add_option("chain", chain_path, "chain file")->required();
  map_spectral.attach(eigenmap);
  eigenmap->add_option("--out", out_path, "PGM output path")->required();
  eigenmap->add_option("--csv", csv_path, "also write the map as CSV");
  eigenmap->add_option("--profiles", profiles_path, "also write per-state profiles CSV");
  eigenmap->callback([&] {
    const lsd::Spectrum s = lsd::eigendecompose(
        lsd::build_hamiltonian(lsd::read_chain(chain_path), map_spectral.resolve()));
    const lsd::EigenstateMap map = lsd::render_eigenmap(s);
    lsd::write_text_file(out_path, lsd::eigenmap_to_pgm(map));
    if (!csv_path.empty()) lsd::write_text_file(csv_path, lsd::eigenmap_to_csv(map));
    if (!profiles_path.empty())
      lsd::write_text_file(profiles_path, lsd::profiles_to_csv(lsd::profile_states(s)));
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "survey all rules n:m over an n range into a JSONL file");
  int n_min = 2, n_max = 2;
  sweep->add_option("--n-min", n_min, "smallest n")->required();
  sweep->add_option("--n-max", n_max, "largest n")->required();
  sweep->add_option("--out", out_path, "JSONL output path (appended, resumable)")->required();
  sweep->callback([&] { lsd::run_sweep(n_min, n_max, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const lsd::DetectionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lsd::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (index " << e.index() << ")\n";
    return 3;
  } catch (const lsd::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
