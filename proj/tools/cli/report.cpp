#include "cli/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace spectral::cli {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(long v) { return std::to_string(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }
std::string fmt(bool v) { return v ? "true" : "false"; }

void Table::write(std::ostream& os) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["tolerances"] = tolerances;
  j["versions"] = {
      {"spectral", SPECTRAL_VERSION},
      {"compiler", __VERSION__},
      {"cplusplus", __cplusplus},
  };
  j["wall_time_s"] = wall_time_s;
  return j;
}

std::filesystem::path manifest_path(const std::filesystem::path& output) {
  return std::filesystem::path(output.string() + ".manifest.json");
}

void write_outputs(const std::filesystem::path& output, const Table& table, const RunManifest& manifest) {
  {
    std::ofstream csv(output);
    if (!csv) throw std::runtime_error("cannot write " + output.string());
    table.write(csv);
  }
  std::ofstream mf(manifest_path(output));
  if (!mf) throw std::runtime_error("cannot write " + manifest_path(output).string());
  mf << manifest.to_json().dump(2) << '\n';
}

}  // namespace spectral::cli
