#pragma once

// The hecke-bound command line, callable in-process.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace heckebound::cli {

enum ExitCode : int { kPass = 0, kAssertionFailure = 1, kUsageError = 2 };

enum class Emit { json, csv, text };

struct RunConfig {
  int m_sr = 7;
  int m_st = 3;
  int max_length = 8;
  std::vector<std::string> checks{"all"};
  Emit emit = Emit::json;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> cache;
  unsigned jobs = 1;
  bool memo = false;
  bool strict = false;
  std::optional<int> single_length;
  std::optional<int> aux_length;
};

/// Runs the configured checks and emits the report to `out` or the config's
/// output path. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Sorted listing of check ids, families, hypotheses and statements.
void list_checks(std::ostream& out);

/// Full entry point: parses flags, the optional --config file and the
/// HECKE_BOUND_CACHE variable.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heckebound::cli
