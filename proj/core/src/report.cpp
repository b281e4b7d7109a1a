#include "heckebound/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

#include <json.hpp>
#include <unistd.h>

namespace heckebound {

namespace {

using nlohmann::ordered_json;

ordered_json tuples(const std::vector<WordTuple>& list) {
  ordered_json out = ordered_json::array();
  for (const WordTuple& t : list) {
    ordered_json row = ordered_json::array();
    for (const Word& w : t) row.push_back(to_string(w));
    out.push_back(std::move(row));
  }
  return out;
}

template <typename T>
ordered_json optional_value(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json check_json(const CheckReport& c) {
  ordered_json j;
  j["id"] = c.id;
  j["family"] = c.family;
  j["statement"] = c.statement;
  j["N"] = c.length_cap;
  j["status"] = to_string(c.status);
  j["hypothesis_met"] = c.hypothesis_met;
  j["bound"] = optional_value(c.bound);
  j["max_degree_seen"] = optional_value(c.max_degree_seen);
  j["items_scanned"] = c.items_scanned;
  j["witnesses"] = tuples(c.witnesses);
  j["witness_count"] = c.witness_count;
  j["extremal"] = tuples(c.extremal);
  ordered_json hist = ordered_json::object();
  for (const auto& [deg, count] : c.histogram) hist[std::to_string(deg)] = count;
  j["histogram"] = std::move(hist);
  ordered_json strata = ordered_json::object();
  for (const auto& [lens, deg] : c.strata) {
    strata[std::to_string(lens.first) + "," + std::to_string(lens.second)] = deg;
  }
  j["strata"] = std::move(strata);
  ordered_json counters = ordered_json::object();
  for (const auto& [name, value] : c.counters) counters[name] = value;
  j["counters"] = std::move(counters);
  j["notes"] = c.notes;
  j["seconds"] = c.seconds;
  return j;
}

void strip(ordered_json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [key, value] : j.items()) strip(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip(value);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
std::string optional_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "";
}

}  // namespace

bool RunReport::passed() const noexcept {
  for (const CheckReport& c : checks) {
    if (c.status == CheckStatus::fail) return false;
  }
  return true;
}

std::string to_json(const RunReport& report, int indent) {
  ordered_json j;
  j["format_version"] = kReportFormatVersion;
  j["params"] = {{"m_sr", report.params.m_sr()}, {"m_st", report.params.m_st()}};
  j["case"] = std::string(to_string(report.params.theorem_case()));
  j["max_length"] = report.max_length;
  j["passed"] = report.passed();
  ordered_json checks = ordered_json::array();
  for (const CheckReport& c : report.checks) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  return j.dump(indent) + "\n";
}

std::string to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "id,family,m_sr,m_st,N,status,hypothesis_met,bound,max_degree_seen,items_scanned,"
         "witness_count,first_witness,seconds\n";
  for (const CheckReport& c : report.checks) {
    std::string first;
    if (!c.witnesses.empty()) {
      for (const Word& w : c.witnesses.front()) {
        if (!first.empty()) first += ' ';
        first += to_string(w);
      }
    }
    out << csv_field(c.id) << ',' << c.family << ',' << report.params.m_sr() << ','
        << report.params.m_st() << ',' << c.length_cap << ',' << to_string(c.status) << ','
        << (c.hypothesis_met ? "true" : "false") << ',' << optional_text(c.bound) << ','
        << optional_text(c.max_degree_seen) << ',' << c.items_scanned << ',' << c.witness_count << ','
        << csv_field(first) << ',' << std::fixed << std::setprecision(6) << c.seconds << '\n';
  }
  return out.str();
}

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  out << "group " << to_string(report.params) << ", " << to_string(report.params.theorem_case())
      << ", max length " << report.max_length << "\n";
  for (const CheckReport& c : report.checks) {
    out << std::left << std::setw(10) << ("[" + to_string(c.status) + "]") << std::setw(28) << c.id
        << " N=" << c.length_cap << " scanned=" << c.items_scanned;
    if (c.max_degree_seen) out << " max_deg=" << *c.max_degree_seen;
    if (c.bound) out << " bound=" << *c.bound;
    if (c.witness_count > 0) out << " witnesses=" << c.witness_count;
    out << std::fixed << std::setprecision(3) << " (" << c.seconds << "s)\n";
    if (!c.witnesses.empty()) {
      out << "    first witness:";
      for (const Word& w : c.witnesses.front()) out << ' ' << (w.empty() ? "e" : to_string(w));
      out << '\n';
    }
    for (const std::string& note : c.notes) out << "    note: " << note << '\n';
  }
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string strip_timing(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  strip(j);
  return j.dump(2) + "\n";
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : ".";
  const std::filesystem::path tmp =
      dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move report into " + path.string() + ": " + ec.message());
  }
}

}  // namespace heckebound
