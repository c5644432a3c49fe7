#pragma once

// JSON body descriptors:
//
//   {"type": "polygon", "vertices": [[x, y], ...]}
//   {"type": "graph", "a": a, "b": b, "f": <height>, "g": <height>}
//
// with <height> one of
//   {"kind": "poly", "coeffs": [c0, c1, ...]}
//   {"kind": "tent"}                      (optional "center", "half_width", "height")
//   {"kind": "semicircle", "r": r}        (optional "center")
//   {"kind": "pw", "knots": [...], "values": [...]}
//   {"kind": "power", "exponent": p}      (optional "center", "half_width", "height")
//
// Omitted centers default to the middle of [a, b], half widths to (b - a)/2
// and tent heights to the half width.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spectral/geometry.hpp"

namespace spectral::cli {

/// Malformed file or schema violation; `path` is the offending field, e.g. "vertices[2][1]".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Well-formed input that does not describe a valid convex body.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const Error& cause) : std::runtime_error(cause.what()), code_(cause.code()) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

ConvexBody parse_body(const nlohmann::json& doc);
ConvexBody parse_body_file(const std::filesystem::path& path);
/// A height descriptor on [a, b].
HeightFunction parse_height(const nlohmann::json& doc, double a, double b, const std::string& path = "");

}  // namespace spectral::cli
