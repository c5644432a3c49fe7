#pragma once

#include <iosfwd>
#include <string>

#include "spectral/geometry.hpp"

namespace spectral::cli {

/// Exit codes: success / checked property failed / input or usage error.
enum ExitCode : int { exit_ok = 0, exit_property_failed = 1, exit_input_error = 2 };

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

Point2 parse_point(const std::string& text);
/// "a b; c d" with the columns as generators.
Lattice parse_lattice(const std::string& text);
std::vector<double> parse_list(const std::string& text);

}  // namespace spectral::cli
