#include "mixspin/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "mixspin/errors.hpp"

namespace mixspin {

std::string format_double(double v) {
  if (!std::isfinite(v)) return {};
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof esc, "\\u%04x", static_cast<unsigned>(c));
          out += esc;
        } else {
          out += c;
        }
    }
  }
  return out;
}

namespace {

bool has_outputs(const SweepRecord& r) { return r.status == RecordStatus::Ok; }

std::string json_number(double v) {
  const std::string s = format_double(v);
  return s.empty() ? "null" : s;
}

std::string json_string(std::string_view s) { return "\"" + json_escape(s) + "\""; }

}  // namespace

std::string csv_row(const SweepRecord& r) {
  const bool out = has_outputs(r);
  std::string row;
  row += to_string(r.kind);
  row += ',';
  row += to_string(r.mode);
  row += ',';
  row += r.r ? format_double(*r.r) : std::string();
  row += ',';
  row += format_double(r.j);
  row += ',';
  row += format_double(r.b);
  row += ',';
  row += format_double(r.t);
  for (double v : {r.negativity, r.log_z, r.neg_block_12, r.neg_block_56}) {
    row += ',';
    if (out) row += format_double(v);
  }
  row += ',';
  row += to_string(r.status);
  return row;
}

void write_csv(std::ostream& os, std::span<const SweepRecord> records) {
  os << kCsvHeader << '\n';
  for (const SweepRecord& r : records) os << csv_row(r) << '\n';
}

void write_json(std::ostream& os, std::span<const SweepRecord> records, const OutputMetadata& meta) {
  auto string_list = [](const std::vector<std::string>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + json_string(v[i]);
    return s + "]";
  };

  os << "{\"metadata\":{";
  os << "\"tool_version\":" << json_string(kToolVersion);
  os << ",\"command\":" << json_string(meta.command);
  os << ",\"preset_id\":" << (meta.preset_id ? json_string(*meta.preset_id) : "null");
  if (meta.preset_title) os << ",\"preset_title\":" << json_string(*meta.preset_title);
  os << ",\"stated_values\":" << string_list(meta.stated_values);
  os << ",\"default_values\":" << string_list(meta.default_values);
  os << ",\"seed\":" << (meta.seed ? std::to_string(*meta.seed) : "null");
  os << "},\"records\":[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SweepRecord& r = records[i];
    const bool out = has_outputs(r);
    if (i) os << ',';
    os << "\n{\"coupling\":" << json_string(to_string(r.kind)) << ",\"mode\":" << json_string(to_string(r.mode))
       << ",\"R\":" << (r.r ? json_number(*r.r) : "null") << ",\"J\":" << json_number(r.j)
       << ",\"B\":" << json_number(r.b) << ",\"T\":" << json_number(r.t)
       << ",\"negativity\":" << (out ? json_number(r.negativity) : "null")
       << ",\"log_Z\":" << (out ? json_number(r.log_z) : "null")
       << ",\"neg_block_12\":" << (out ? json_number(r.neg_block_12) : "null")
       << ",\"neg_block_56\":" << (out ? json_number(r.neg_block_56) : "null")
       << ",\"status\":" << json_string(to_string(r.status)) << '}';
  }
  os << "\n]}\n";
}

std::string critical_point_csv(const CriticalPoint& cp) {
  std::string s = "axis,value,epsilon,lo,hi,iterations,epsilon_contour\n";
  s += std::string(to_string(cp.axis)) + ',' + format_double(cp.value) + ',' + format_double(cp.epsilon) + ',' +
       format_double(cp.lo) + ',' + format_double(cp.hi) + ',' + std::to_string(cp.iterations) + ',' +
       (cp.epsilon_contour ? "true" : "false") + '\n';
  return s;
}

std::string critical_point_json(const CriticalPoint& cp) {
  std::ostringstream os;
  os << "{\"axis\":" << json_string(to_string(cp.axis)) << ",\"value\":" << json_number(cp.value)
     << ",\"epsilon\":" << json_number(cp.epsilon) << ",\"bracket\":[" << json_number(cp.lo) << ','
     << json_number(cp.hi) << "],\"iterations\":" << cp.iterations
     << ",\"epsilon_contour\":" << (cp.epsilon_contour ? "true" : "false") << "}\n";
  return os.str();
}

std::string validation_report_json(const ValidationReport& rep, double tolerance, bool within_tolerance,
                                   std::uint64_t seed) {
  auto sample = [](const ValidationSample& s) {
    std::ostringstream os;
    os << "{\"coupling\":" << json_string(to_string(s.kind)) << ",\"R\":" << json_number(s.r)
       << ",\"J\":" << json_number(s.j) << ",\"B\":" << json_number(s.b) << ",\"T\":" << json_number(s.t)
       << ",\"n_a\":" << json_number(s.n_a) << ",\"n_b\":" << json_number(s.n_b)
       << ",\"delta\":" << json_number(s.delta) << '}';
    return os.str();
  };
  std::ostringstream os;
  os << "{\"tool_version\":" << json_string(kToolVersion) << ",\"mode_a\":" << json_string(to_string(rep.mode_a))
     << ",\"mode_b\":" << json_string(to_string(rep.mode_b)) << ",\"seed\":" << seed
     << ",\"samples\":" << rep.samples << ",\"max_abs_delta_N\":" << json_number(rep.max_abs_delta)
     << ",\"argmax\":" << (rep.argmax ? sample(*rep.argmax) : "null") << ",\"worst\":[";
  for (std::size_t i = 0; i < rep.worst.size(); ++i) os << (i ? "," : "") << "\n" << sample(rep.worst[i]);
  os << "],\"sign_mismatch_count\":" << rep.sign_mismatch_count << ",\"overflow_count\":" << rep.overflow_count
     << ",\"tolerance\":" << json_number(tolerance)
     << ",\"within_tolerance\":" << (within_tolerance ? "true" : "false") << "}\n";
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      f.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot move output into place at " + path.string());
  }
}

}  // namespace mixspin
