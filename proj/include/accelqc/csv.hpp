#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "accelqc/errors.hpp"
#include "accelqc/sweep.hpp"

namespace accelqc {

inline constexpr const char* kCsvHeader = "r,t,alpha,scenario,pt_target,negativity,naqc";

/// 12 significant digits, shortest form ("%.12g").
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void write_csv(std::ostream& os, const std::vector<MeasureRecord>& records) {
  os << kCsvHeader << '\n';
  for (const auto& rec : records) {
    os << format_number(rec.r) << ',' << format_number(rec.t) << ',' << format_number(rec.alpha) << ','
       << scenario_label(rec.scenario) << ',' << pt_target_label(rec.pt_target) << ',';
    if (rec.negativity) os << format_number(*rec.negativity);
    os << ',';
    if (rec.naqc) os << format_number(*rec.naqc);
    os << '\n';
  }
}

inline void emit_csv(const std::vector<MeasureRecord>& records, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + destination.string() + "' for writing");
  write_csv(out, records);
  out.flush();
  if (!out) throw IoError("write to '" + destination.string() + "' failed");
}

}  // namespace accelqc
