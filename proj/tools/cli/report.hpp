#pragma once

// CSV tables and the run manifest written next to every output file.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace spectral::cli {

/// Round-trippable decimal: 17 significant digits, "C" formatting.
std::string fmt(double v);
std::string fmt(long v);
std::string fmt(std::size_t v);
std::string fmt(bool v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os) const;
};

struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json tolerances = nlohmann::json::object();
  double wall_time_s = 0.0;

  nlohmann::json to_json() const;
};

/// `<output>.manifest.json`.
std::filesystem::path manifest_path(const std::filesystem::path& output);
void write_outputs(const std::filesystem::path& output, const Table& table, const RunManifest& manifest);

}  // namespace spectral::cli
