#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

enum class ErrorCode {
  invalid_argument,
  not_convex,
  degenerate,
  not_symmetric,
  edge_through_origin,
  not_standard_position,
  no_blowup,
  no_zeros_found,
  insufficient_window,
  covolume_mismatch,
  not_tileable,
  parallel_features,
  too_few_vertices,
  missing_origin,
  duplicate_points,
};

const char* to_string(ErrorCode code) noexcept;

/// Contract violation raised by library operations. The code identifies which
/// precondition failed; the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spectral
