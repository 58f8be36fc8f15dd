#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mixspin/analysis.hpp"

namespace mixspin::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // I/O and other unexpected errors
  kUsage = 2,
  kDomain = 3,
  kToleranceExceeded = 4,
  kNoThreshold = 5,
};

// A flag value: a single real, start:stop:count, or a comma-separated list.
using FlagValue = std::variant<double, LinearRange, std::vector<double>>;

// Throws ArgumentError on malformed input.
FlagValue parse_flag_value(std::string_view text);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixspin::cli
