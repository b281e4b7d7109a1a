#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "heckebound/registry.hpp"
#include "heckebound/report.hpp"

using namespace heckebound;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hecke-bound");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("heckebound_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("list_checks is sorted and names every registered check") {
  const Result r = invoke({"--list-checks"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lemma-3.1 ") != std::string::npos);
  CHECK(r.out.find("(st)") != std::string::npos);
  CHECK(r.out.find("(sr)") != std::string::npos);
  CHECK(r.out.find("theorem-3.13") != std::string::npos);
  CHECK(r.out.find("lemma-4.7/alpha=t") != std::string::npos);
  CHECK(r.out.find("lemma-4.7/alpha=r") != std::string::npos);
  for (const CheckSpec& spec : check_registry()) CHECK(r.out.find(spec.id) != std::string::npos);
  CHECK(r.out.find("lemma-3.9") < r.out.find("lemma-3.10"));
  CHECK(invoke({"--list-checks"}).out == r.out);
}

TEST_CASE("natural ordering and selection") {
  CHECK(natural_less("lemma-3.9", "lemma-3.10"));
  CHECK_FALSE(natural_less("lemma-3.10", "lemma-3.9"));
  CHECK(natural_less("lemma-4.3a", "lemma-4.3b"));
  CHECK(natural_less("lemma-4.3", "lemma-4.3a"));
  const auto theorem = select_checks({"theorem"});
  REQUIRE(theorem.size() == 1);
  CHECK(theorem[0]->id == "theorem-2.1");
  CHECK(select_checks({"lemma-4.7"}).size() == 2);
  CHECK(select_checks({"suffix"}).size() == 11);
  CHECK(select_checks({"all"}).size() == check_registry().size());
  const auto mixed = select_checks({"lemma-3.1", "suffix", "lemma-3.1"});
  CHECK(mixed.size() == 11);
  CHECK(mixed[0]->id == "lemma-3.1");
  CHECK_THROWS_AS(select_checks({"lemma-9.9"}), UnknownCheck);
}

TEST_CASE("theorem run, case (b)") {
  const Result r = invoke({"--m-sr", "5", "--m-st", "4", "--max-length", "8", "--check", "theorem"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["format_version"] == kReportFormatVersion);
  CHECK(j["params"]["m_sr"] == 5);
  CHECK(j["params"]["m_st"] == 4);
  CHECK(j["case"] == "case-b");
  REQUIRE(j["checks"].size() == 1);
  const json& c = j["checks"][0];
  CHECK(c["id"] == "theorem-2.1");
  CHECK(c["N"] == 8);
  CHECK(c["status"] == "pass");
  CHECK(c["bound"] == 5);
  CHECK(c["max_degree_seen"].get<int>() <= 5);
  CHECK(c["witnesses"].empty());
  CHECK(c.contains("histogram"));
  CHECK(c.contains("seconds"));
}

TEST_CASE("trivial window") {
  const Result r = invoke({"--m-sr", "7", "--m-st", "3", "--max-length", "0", "--check", "theorem"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["checks"][0]["items_scanned"] == 1);
  CHECK(j["checks"][0]["histogram"] == json{{"0", 1}});
}

TEST_CASE("full run at N = 8 in (7,3)") {
  const Result r = invoke({"--m-sr", "7", "--m-st", "3", "--max-length", "8", "--check", "all", "--emit", "json"});
  const json j = json::parse(r.out);
  CHECK(j["checks"].size() == check_registry().size());
  std::vector<std::string> failing;
  for (const json& c : j["checks"]) {
    if (c["status"] == "fail") failing.push_back(c["id"]);
    if (c["id"] == "theorem-3.13") {
      CHECK(c["status"] == "pass");
      CHECK(c["max_degree_seen"] == 7);
    }
  }
  // The sandwich statement has counterexamples once l(x), l(y) reach 7
  // (see the sandwich witness test); every other check passes.
  CHECK(failing == std::vector<std::string>{"lemma-3.5"});
  CHECK(r.code == 1);
}

TEST_CASE("csv and text output") {
  const Result csv = invoke({"--m-sr", "7", "--m-st", "3", "--max-length", "3", "--check", "suffix", "--emit", "csv"});
  CHECK(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("id,family,m_sr,m_st,N,status", 0) == 0);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 11);

  const Result text = invoke({"--m-sr", "7", "--m-st", "3", "--max-length", "3", "--check", "lemma-3.1", "--emit", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("[pass]") != std::string::npos);
  CHECK(text.out.find("PASS") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with a JSON line on stderr") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--m-sr", "2"},
           {"--m-st", "1"},
           {"--max-length", "-1"},
           {"--check", "lemma-9.9"},
           {"--emit", "xml"},
           {"--jobs", "0"},
           {"--no-such-flag"},
           {"--config", "/nonexistent/heckebound.conf"}}) {
    const Result r = invoke(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    const json err = json::parse(r.err);
    CHECK(err.contains("error"));
    CHECK(err.contains("message"));
  }
}

TEST_CASE("strict mode rejects checks outside their hypothesis") {
  const Result r = invoke({"--m-sr", "4", "--m-st", "3", "--max-length", "2", "--check", "lemma-3.1", "--strict"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"] == "hypothesis");
  const Result lax = invoke({"--m-sr", "4", "--m-st", "3", "--max-length", "2", "--check", "lemma-3.1"});
  CHECK(lax.code == 0);
  CHECK(json::parse(lax.out)["checks"][0]["status"] == "advisory");
}

TEST_CASE("report is written to --out") {
  const auto path = temp_path("report.json");
  std::filesystem::remove(path);
  const Result r = invoke({"--max-length", "2", "--check", "theorem", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const json j = json::parse(slurp(path));
  CHECK(j["checks"][0]["id"] == "theorem-2.1");
  for (const auto& entry : std::filesystem::directory_iterator(path.parent_path())) {
    CHECK(entry.path().filename().string().find(".report.json.tmp") == std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST_CASE("config file values are overridden by flags") {
  const auto path = temp_path("run.conf");
  {
    std::ofstream out(path);
    out << "m-sr = 5\nm-st = 4\nmax-length = 3\ncheck = theorem\nemit = csv\n";
  }
  const Result from_file = invoke({"--config", path.string()});
  CHECK(from_file.code == 0);
  CHECK(from_file.out.find("theorem-2.1,theorem,5,4,3,pass") != std::string::npos);
  const Result overridden = invoke({"--config", path.string(), "--m-st", "5", "--emit", "json"});
  CHECK(overridden.code == 0);
  CHECK(json::parse(overridden.out)["params"]["m_st"] == 5);
  std::filesystem::remove(path);
}

TEST_CASE("reduction cache via flag and environment") {
  const auto path = temp_path("cache.txt");
  std::filesystem::remove(path);
  const Result first = invoke({"--max-length", "4", "--check", "tits-consistency", "--cache", path.string()});
  CHECK(first.code == 0);
  REQUIRE(std::filesystem::exists(path));
  const std::string saved = slurp(path);
  CHECK(saved.find("m_sr=7") != std::string::npos);

  ::setenv("HECKE_BOUND_CACHE", path.string().c_str(), 1);
  const Result again = invoke({"--max-length", "4", "--check", "tits-consistency"});
  CHECK(again.code == 0);
  const Result mismatch = invoke({"--m-sr", "5", "--m-st", "4", "--max-length", "2", "--check", "theorem"});
  ::unsetenv("HECKE_BOUND_CACHE");
  CHECK(mismatch.code == 2);
  const std::string msg = json::parse(mismatch.err)["message"];
  CHECK(msg.find("m_sr=7") != std::string::npos);
  CHECK(msg.find("m_sr=5") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("jobs do not change the report") {
  const auto a = invoke({"--m-sr", "5", "--m-st", "4", "--max-length", "5", "--jobs", "1"});
  const auto b = invoke({"--m-sr", "5", "--m-st", "4", "--max-length", "5", "--jobs", "8", "--memo"});
  CHECK(a.code == b.code);
  CHECK(strip_timing(a.out) == strip_timing(b.out));
  CHECK(strip_timing(a.out).find("\"seconds\"") == std::string::npos);
}
