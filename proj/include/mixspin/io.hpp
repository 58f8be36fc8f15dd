#pragma once

// CSV / JSON emission. Numbers are written in the shortest decimal form that
// parses back to the same binary64 value.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixspin/analysis.hpp"

namespace mixspin {

inline constexpr std::string_view kToolVersion = "mixspin 1.0.0";

inline constexpr std::string_view kCsvHeader =
    "coupling,mode,R,J,B,T,negativity,log_Z,neg_block_12,neg_block_56,status";

std::string format_double(double v);
std::string json_escape(std::string_view s);

std::string csv_row(const SweepRecord& r);
void write_csv(std::ostream& os, std::span<const SweepRecord> records);

struct OutputMetadata {
  std::string command;
  std::optional<std::string> preset_id;
  std::optional<std::string> preset_title;
  std::vector<std::string> stated_values;
  std::vector<std::string> default_values;
  std::optional<std::uint64_t> seed;
};

void write_json(std::ostream& os, std::span<const SweepRecord> records, const OutputMetadata& meta);

std::string critical_point_csv(const CriticalPoint& cp);
std::string critical_point_json(const CriticalPoint& cp);

std::string validation_report_json(const ValidationReport& rep, double tolerance, bool within_tolerance,
                                   std::uint64_t seed);

// Writes to a sibling temporary file and renames it into place, so readers
// never observe a partially written output.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace mixspin
