#pragma once

// Serialization of a run: one JSON document, a flat CSV table, or text.

#include <filesystem>
#include <string>
#include <vector>

#include "heckebound/verifier.hpp"

namespace heckebound {

inline constexpr int kReportFormatVersion = 1;

struct RunReport {
  GroupParams params{7, 3};
  int max_length = 0;
  std::vector<CheckReport> checks;

  /// True when no asserting check failed.
  bool passed() const noexcept;
};

std::string to_json(const RunReport& report, int indent = 2);
std::string to_csv(const RunReport& report);
std::string to_text(const RunReport& report);

/// Re-serializes a JSON report with every "seconds" field removed.
std::string strip_timing(const std::string& json_text);

/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never see a partial report.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace heckebound
