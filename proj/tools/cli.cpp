#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckebound/coxeter.hpp"
#include "heckebound/registry.hpp"
#include "heckebound/report.hpp"

namespace heckebound::cli {

namespace {

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << '\n';
}

std::string render(const RunReport& report, Emit emit) {
  switch (emit) {
    case Emit::json:
      return to_json(report);
    case Emit::csv:
      return to_csv(report);
    case Emit::text:
      return to_text(report);
  }
  return {};
}

}  // namespace

void list_checks(std::ostream& out) {
  for (const CheckSpec* spec : sorted_checks()) {
    out << std::left << std::setw(28) << spec->id << std::setw(11) << spec->family << spec->statement
        << "\n" << std::setw(39) << "" << "hypothesis: " << spec->hypothesis
        << (spec->asserting ? "" : " (advisory)") << '\n';
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<GroupParams> params;
  std::vector<const CheckSpec*> selected;
  try {
    params.emplace(config.m_sr, config.m_st);
    if (config.max_length < 0) throw std::invalid_argument("max_length must be >= 0");
    if (config.single_length && *config.single_length < 0) {
      throw std::invalid_argument("single_length must be >= 0");
    }
    if (config.aux_length && *config.aux_length < 0) throw std::invalid_argument("aux_length must be >= 0");
    selected = select_checks(config.checks);
  } catch (const std::exception& e) {
    report_error(err, "usage", e.what());
    return kUsageError;
  }

  const CoxeterGroup group(*params);
  VerifierOptions options;
  options.jobs = std::max(1U, config.jobs);
  options.memo = config.memo;
  Verifier verifier(group, options);

  if (config.cache && std::filesystem::exists(*config.cache)) {
    try {
      verifier.word_problem().cache().load(*config.cache, *params);
    } catch (const std::exception& e) {
      report_error(err, "cache", e.what());
      return kUsageError;
    }
  }

  RunLengths lengths;
  lengths.pair = config.max_length;
  lengths.single = config.single_length.value_or(config.max_length + 2);
  lengths.aux = config.aux_length.value_or(std::min(config.max_length, 6));

  RunReport report;
  report.params = *params;
  report.max_length = config.max_length;
  try {
    for (const CheckSpec* spec : selected) report.checks.push_back(run_check(*spec, verifier, lengths, config.strict));
  } catch (const HypothesisMismatch& e) {
    report_error(err, "hypothesis", e.what());
    return kUsageError;
  }

  try {
    if (config.cache) verifier.word_problem().cache().save(*config.cache, *params);
    const std::string text = render(report, config.emit);
    if (config.out) {
      write_atomically(*config.out, text);
    } else {
      out << text;
    }
  } catch (const std::exception& e) {
    report_error(err, "io", e.what());
    return kUsageError;
  }
  return report.passed() ? kPass : kAssertionFailure;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive window checks of degree bounds for Hecke algebra structure constants",
               "hecke-bound"};
  app.option_defaults()->always_capture_default();
  RunConfig config;
  std::string emit = "json";
  std::string out_path;
  std::string cache_path;
  int single_length = -1;
  int aux_length = -1;
  bool show_list = false;

  app.set_config("--config", "", "key = value file; flags given on the command line take precedence");
  app.add_option("--m-sr", config.m_sr, "bond label m_sr (>= 3)");
  app.add_option("--m-st", config.m_st, "bond label m_st (>= 3)");
  app.add_option("--max-length", config.max_length, "length cap N for pair scans");
  app.add_option("--check", config.checks, "check id, family, 'theorem' or 'all' (repeatable)")
      ->delimiter(',');
  app.add_option("--emit", emit, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--cache", cache_path, "reduction cache file (default: $HECKE_BOUND_CACHE)");
  app.add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--memo", config.memo, "share partial products along prefixes");
  app.add_flag("--strict", config.strict, "reject checks whose hypothesis the group does not meet");
  app.add_option("--single-length", single_length, "length cap for single-element scans (default N+2)");
  app.add_option("--aux-length", aux_length, "length cap for invariant and KL scans (default min(N, 6))");
  app.add_flag("--list-checks", show_list, "list the registered checks and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kUsageError;
  }

  if (show_list) {
    list_checks(out);
    return kPass;
  }

  static const std::map<std::string, Emit> emits{{"json", Emit::json}, {"csv", Emit::csv}, {"text", Emit::text}};
  config.emit = emits.at(emit);
  if (!out_path.empty()) config.out = out_path;
  if (cache_path.empty()) {
    if (const char* env = std::getenv("HECKE_BOUND_CACHE"); env != nullptr && *env != '\0') cache_path = env;
  }
  if (!cache_path.empty()) config.cache = cache_path;
  if (single_length >= 0) config.single_length = single_length;
  if (aux_length >= 0) config.aux_length = aux_length;
  return run(config, out, err);
}

}  // namespace heckebound::cli
