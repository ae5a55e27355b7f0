#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "lsd/analysis.hpp"
#include "lsd/chain.hpp"
#include "lsd/periodicity.hpp"
#include "lsd/symmetry.hpp"
#include "lsd/tight_binding.hpp"

namespace lsd {

/// Chain text goes to `path` (one letter per symbol for alphabets up to 26,
/// decimal ids otherwise); the operation history goes to "<path>.axes.json"
/// as "pos:k" entries.
void write_chain(const Chain& chain, const std::filesystem::path& path);

/// Reads chain text and, when present, the axes sidecar.
Chain read_chain(const std::filesystem::path& path);

std::filesystem::path axes_sidecar_path(const std::filesystem::path& chain_path);

nlohmann::ordered_json to_json(const PeriodicityReport& report);
nlohmann::ordered_json to_json(const Prediction& prediction);
nlohmann::ordered_json to_json(const CoverageReport& report);
nlohmann::ordered_json domains_to_json(const std::vector<ReflectionDomain>& reflections,
                                       const std::vector<TranslationDomain>& translations);
std::string domains_to_csv(const std::vector<ReflectionDomain>& reflections,
                           const std::vector<TranslationDomain>& translations);

std::string spectrum_to_csv(const Spectrum& spectrum);
std::string eigenvectors_to_csv(const Spectrum& spectrum);  // row = state
std::string profiles_to_csv(const std::vector<StateProfile>& profiles);

/// Binary PGM (P5), width = sites, height = states, maxval 255,
/// pixel = round(255 * grid value).
std::string eigenmap_to_pgm(const EigenstateMap& map);
std::string eigenmap_to_csv(const EigenstateMap& map);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace lsd
