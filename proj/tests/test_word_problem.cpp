#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "heckebound/word_problem.hpp"
#include "oracles.hpp"

using namespace heckebound;

namespace {

std::set<std::string> closure_strings(WordProblem& wp, std::string_view w) {
  std::set<std::string> out;
  for (const Word& x : wp.braid_closure(parse_word(w))) out.insert(to_string(x));
  return out;
}

std::string nf(WordProblem& wp, std::string_view w) { return to_string(wp.normal_form(parse_word(w))); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("heckebound_test_" + name);
}

}  // namespace

TEST_CASE("words and generator sets") {
  CHECK(to_string(parse_word("stsr")) == "stsr");
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("sx"), std::invalid_argument);
  CHECK(to_string(reversed(parse_word("str"))) == "rts");
  CHECK(to_string(alternating(Generator::s, Generator::r, 5)) == "srsrs");
  const GeneratorSet st{Generator::s, Generator::t};
  CHECK(st.size() == 2);
  CHECK(st.contains(Generator::t));
  CHECK_FALSE(st.contains(Generator::r));
  CHECK(to_string(st) == "{s,t}");
  CHECK((st | GeneratorSet{Generator::r}).size() == 3);
  CHECK((st & GeneratorSet{Generator::t, Generator::r}) == GeneratorSet{Generator::t});
}

TEST_CASE("group parameters and cases") {
  CHECK_THROWS_AS(GroupParams(2, 3), InvalidParams);
  CHECK_THROWS_AS(GroupParams(3, 2), InvalidParams);
  CHECK(GroupParams(7, 3).theorem_case() == TheoremCase::case_a);
  CHECK(GroupParams(7, 3).degree_bound() == 7);
  CHECK(GroupParams(5, 4).theorem_case() == TheoremCase::case_b);
  CHECK(GroupParams(5, 6).degree_bound() == 6);
  CHECK(GroupParams(6, 3).theorem_case() == TheoremCase::out_of_theorem);
  CHECK(GroupParams(4, 4).theorem_case() == TheoremCase::out_of_theorem);
  CHECK(GroupParams(4, 3).is_finite());
  CHECK_FALSE(GroupParams(6, 3).is_finite());
  CHECK(GroupParams(7, 3).bond(Generator::t, Generator::r) == 2);
  CHECK(GroupParams(7, 3).bond(Generator::r, Generator::s) == 7);
}

TEST_CASE("braid relations") {
  const auto rel = braid_relations(GroupParams(7, 3));
  CHECK(rel.size() == 3);
  std::multiset<int> lengths;
  for (const auto& r : rel) {
    lengths.insert(r.length);
    CHECK(r.lhs().size() == r.rhs().size());
  }
  CHECK(lengths == std::multiset<int>{2, 3, 7});
}

TEST_CASE("braid_closure examples") {
  WordProblem wp(GroupParams(7, 3));
  CHECK(closure_strings(wp, "s") == std::set<std::string>{"s"});
  CHECK(closure_strings(wp, "sts") == std::set<std::string>{"sts", "tst"});
  CHECK(closure_strings(wp, "tr") == std::set<std::string>{"tr", "rt"});
  CHECK(closure_strings(wp, "") == std::set<std::string>{""});
  CHECK_THROWS_AS(wp.braid_closure(parse_word("ss")), NotReduced);
  CHECK_THROWS_AS(wp.braid_closure(parse_word("stst")), NotReduced);
}

TEST_CASE("reduce examples") {
  WordProblem wp(GroupParams(7, 3));
  CHECK(nf(wp, "ss") == "");
  CHECK(nf(wp, "tst") == "sts");
  CHECK(nf(wp, "srsrsrs") == "srsrsrs");
  CHECK(nf(wp, "rsrsrsr") == "srsrsrs");
  CHECK(nf(wp, "rt") == "tr");
  const Reduction red = wp.reduce(parse_word("tst"));
  CHECK(red.length() == 3);
  CHECK(red.left_descents == GeneratorSet{Generator::s, Generator::t});
  CHECK(red.right_descents == GeneratorSet{Generator::s, Generator::t});
}

TEST_CASE("is_reduced and equal examples") {
  WordProblem wp7(GroupParams(7, 3));
  CHECK(wp7.is_reduced({}));
  CHECK_FALSE(wp7.is_reduced(parse_word("ss")));
  WordProblem wp5(GroupParams(5, 3));
  CHECK_FALSE(wp5.is_reduced(parse_word("srsrsr")));
  CHECK(wp5.is_reduced(parse_word("srsrs")));
  CHECK(wp7.equal(parse_word("tr"), parse_word("rt")));
  CHECK_FALSE(wp7.equal(parse_word("s"), parse_word("t")));
  WordProblem wp44(GroupParams(5, 4));
  CHECK(wp44.equal(parse_word("stst"), parse_word("tsts")));
  CHECK_FALSE(wp7.equal(parse_word("stst"), parse_word("tsts")));
}

TEST_CASE("reduce agrees with the brute-force closure oracle on words of length <= 6") {
  for (const auto& [a, b] : {std::pair{7, 3}, {5, 4}, {4, 3}}) {
    WordProblem wp(GroupParams(a, b));
    for (int n = 0; n <= 6; ++n) {
      for (const std::string& w : oracle::all_words(n)) {
        const auto expected = oracle::reduced_expressions(w, a, b);
        const Reduction red = wp.reduce(parse_word(w));
        CHECK(to_string(red.normal_form) == oracle::shortlex_min(expected));
        std::set<std::string> got;
        for (const Word& x : wp.braid_closure(red.normal_form)) got.insert(to_string(x));
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("confluence: reduce is invariant under one braid move or one deletion") {
  const GroupParams params(7, 3);
  WordProblem wp(params);
  const auto rels = braid_relations(params);
  for (int n = 0; n <= 8; ++n) {
    for (const std::string& s : oracle::all_words(n)) {
      const Word w = parse_word(s);
      const Word target = wp.normal_form(w);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i + 1 < w.size() && w[i] == w[i + 1]) {
          Word shorter = w;
          shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i), shorter.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          REQUIRE(wp.normal_form(shorter) == target);
        }
        for (const auto& rel : rels) {
          for (const auto& [from, to] : {std::pair{rel.lhs(), rel.rhs()}, std::pair{rel.rhs(), rel.lhs()}}) {
            if (i + from.size() > w.size() || !std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) continue;
            Word moved = w;
            std::copy(to.begin(), to.end(), moved.begin() + static_cast<std::ptrdiff_t>(i));
            REQUIRE(wp.normal_form(moved) == target);
          }
        }
      }
    }
  }
}

TEST_CASE("w times its reversal is the identity for |w| <= 6") {
  WordProblem wp(GroupParams(7, 3));
  for (int n = 0; n <= 6; ++n) {
    for (const std::string& s : oracle::all_words(n)) {
      Word w = parse_word(s);
      const Word r = reversed(w);
      w.insert(w.end(), r.begin(), r.end());
      REQUIRE(wp.normal_form(w).empty());
    }
  }
}

TEST_CASE("words beyond the configured cap are rejected") {
  WordProblem wp(GroupParams(7, 3), WordProblemOptions{10});
  CHECK_THROWS_AS(wp.reduce(Word(11, Generator::s)), WordTooLong);
  CHECK(wp.reduce(Word(10, Generator::s)).normal_form.empty());
}

TEST_CASE("reduction cache round-trips through a file") {
  const GroupParams params(7, 3);
  const auto path = temp_path("cache_roundtrip.txt");
  WordProblem a(params);
  for (int n = 0; n <= 4; ++n) {
    for (const std::string& s : oracle::all_words(n)) a.reduce(parse_word(s));
  }
  const CacheStats before = a.cache().stats();
  CHECK(before.entries > 0);
  CHECK(before.misses > 0);
  a.cache().save(path, params);

  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("m_sr=7") != std::string::npos);
  CHECK(header.find("m_st=3") != std::string::npos);

  WordProblem b(params);
  b.cache().load(path, params);
  CHECK(b.cache().stats().entries == before.entries);
  CHECK(b.cache().find(parse_word("tst")).value() == parse_word("sts"));
  CHECK(to_string(b.normal_form(parse_word("rsrsrsr"))) == "srsrsrs");
  CHECK(b.cache().stats().hits >= 1);
  std::filesystem::remove(path);
}

TEST_CASE("loading a cache written for other parameters names both parameter sets") {
  const auto path = temp_path("cache_mismatch.txt");
  WordProblem a(GroupParams(7, 3));
  a.reduce(parse_word("stst"));
  a.cache().save(path, GroupParams(7, 3));
  WordProblem b(GroupParams(5, 4));
  try {
    b.cache().load(path, GroupParams(5, 4));
    FAIL("expected CacheMismatch");
  } catch (const CacheMismatch& e) {
    const std::string msg = e.what();
    CHECK(msg.find("m_sr=7") != std::string::npos);
    CHECK(msg.find("m_st=3") != std::string::npos);
    CHECK(msg.find("m_sr=5") != std::string::npos);
    CHECK(msg.find("m_st=4") != std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST_CASE("malformed cache files are rejected") {
  const auto path = temp_path("cache_bad.txt");
  {
    std::ofstream out(path);
    out << "not a header\n";
  }
  WordProblem wp(GroupParams(7, 3));
  CHECK_THROWS_AS(wp.cache().load(path, GroupParams(7, 3)), CacheFormatError);
  std::filesystem::remove(path);
}
