#include "lsd/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lsd/errors.hpp"

namespace lsd {

namespace {

std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

}  // namespace

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return buffer.str();
}

std::filesystem::path axes_sidecar_path(const std::filesystem::path& chain_path) {
  std::filesystem::path p = chain_path;
  p += ".axes.json";
  return p;
}

void write_chain(const Chain& chain, const std::filesystem::path& path) {
  write_text_file(path, to_string(chain) + "\n");

  nlohmann::ordered_json axes = nlohmann::ordered_json::array();
  for (const ReflectionAxis& a : chain.axes())
    axes.push_back(std::to_string(a.position) + ":" + std::to_string(a.size));
  nlohmann::ordered_json sidecar;
  sidecar["axes"] = std::move(axes);
  write_text_file(axes_sidecar_path(path), sidecar.dump(2) + "\n");
}

Chain read_chain(const std::filesystem::path& path) {
  const Chain bare = Chain::from_string(read_text_file(path));

  const std::filesystem::path sidecar = axes_sidecar_path(path);
  if (!std::filesystem::exists(sidecar)) return bare;

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(sidecar));
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("malformed axes sidecar " + sidecar.string() + ": " + e.what());
  }
  std::vector<ReflectionAxis> axes;
  for (const auto& entry : doc.at("axes")) {
    const std::string text = entry.get<std::string>();
    const auto colon = text.find(':');
    if (colon == std::string::npos)
      throw IoError("malformed axis entry in " + sidecar.string());
    axes.push_back(ReflectionAxis{std::stoul(text.substr(0, colon)),
                                  std::stoul(text.substr(colon + 1))});
  }
  return Chain(bare.symbols(), std::move(axes));
}

nlohmann::ordered_json to_json(const PeriodicityReport& report) {
  nlohmann::ordered_json j;
  j["transient"] = report.transient;
  j["period"] = report.period;
  j["unit_cell"] = to_string(report.unit_cell);
  j["distinct_symbols"] = report.distinct_tail_symbols;
  return j;
}

nlohmann::ordered_json to_json(const Prediction& prediction) {
  nlohmann::ordered_json j;
  j["structural_period"] = prediction.structural_period;
  j["distinct_symbols"] = prediction.distinct_symbols;
  j["transient_order"] = prediction.transient_order;
  j["branching_path"] = prediction.branching_path;
  j["branching_path_inclusive"] = prediction.branching_path_inclusive;
  j["formula_transient"] = prediction.formula_transient;
  return j;
}

nlohmann::ordered_json to_json(const CoverageReport& report) {
  nlohmann::ordered_json j;
  j["covered_fraction"] = report.covered_fraction;
  j["classification"] = to_string(report.classification);
  nlohmann::ordered_json gaps = nlohmann::ordered_json::array();
  for (const SiteInterval& g : report.gaps)
    gaps.push_back({{"begin", g.begin}, {"end", g.end}});
  j["gaps"] = std::move(gaps);
  return j;
}

nlohmann::ordered_json domains_to_json(const std::vector<ReflectionDomain>& reflections,
                                       const std::vector<TranslationDomain>& translations) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const ReflectionDomain& d : reflections) {
    nlohmann::ordered_json j;
    j["type"] = "reflection";
    j["center"] = d.center;
    j["extent"] = d.extent;
    list.push_back(std::move(j));
  }
  for (const TranslationDomain& d : translations) {
    nlohmann::ordered_json j;
    j["type"] = "translation";
    j["start"] = d.start;
    j["block"] = d.block_length;
    j["reps"] = d.repetitions;
    list.push_back(std::move(j));
  }
  return list;
}

std::string domains_to_csv(const std::vector<ReflectionDomain>& reflections,
                           const std::vector<TranslationDomain>& translations) {
  std::string out = "type,center,extent,start,block,reps\n";
  for (const ReflectionDomain& d : reflections)
    out += "reflection," + format_double(d.center) + "," + std::to_string(d.extent) + ",,,\n";
  for (const TranslationDomain& d : translations)
    out += "translation,,," + std::to_string(d.start) + "," +
           std::to_string(d.block_length) + "," + std::to_string(d.repetitions) + "\n";
  return out;
}

std::string spectrum_to_csv(const Spectrum& spectrum) {
  std::string out = "state_index,eigenvalue\n";
  for (Eigen::Index k = 0; k < spectrum.size(); ++k)
    out += std::to_string(k) + "," + format_double(spectrum.eigenvalues[k]) + "\n";
  return out;
}

std::string eigenvectors_to_csv(const Spectrum& spectrum) {
  std::string out;
  const Eigen::Index n = spectrum.size();
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i) out += ',';
      out += format_double(spectrum.eigenvectors(i, k));
    }
    out += '\n';
  }
  return out;
}

std::string profiles_to_csv(const std::vector<StateProfile>& profiles) {
  std::string out = "state,eigenvalue,center,spread,pr,edge_weight,edge_side\n";
  for (const StateProfile& p : profiles) {
    out += std::to_string(p.state_index) + "," + format_double(p.eigenvalue) + "," +
           format_double(p.center) + "," + format_double(p.spread) + "," +
           format_double(p.participation_ratio) + "," + format_double(p.edge_weight) +
           "," + to_string(p.edge_side) + "\n";
  }
  return out;
}

std::string eigenmap_to_pgm(const EigenstateMap& map) {
  const Eigen::Index states = map.grid.rows();
  const Eigen::Index sites = map.grid.cols();
  std::string out = "P5\n" + std::to_string(sites) + " " + std::to_string(states) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(states * sites));
  for (Eigen::Index k = 0; k < states; ++k)
    for (Eigen::Index i = 0; i < sites; ++i)
      out.push_back(static_cast<char>(
          static_cast<unsigned char>(std::lround(255.0 * map.grid(k, i)))));
  return out;
}

std::string eigenmap_to_csv(const EigenstateMap& map) {
  std::string out;
  for (Eigen::Index k = 0; k < map.grid.rows(); ++k) {
    for (Eigen::Index i = 0; i < map.grid.cols(); ++i) {
      if (i) out += ',';
      out += format_double(map.grid(k, i));
    }
    out += '\n';
  }
  return out;
}

}  // namespace lsd
