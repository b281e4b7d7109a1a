#include <doctest.h>

#include <set>
#include <thread>

#include "heckebound/coxeter.hpp"
#include "oracles.hpp"

using namespace heckebound;

namespace {

constexpr GeneratorSet kST{Generator::s, Generator::t};
constexpr GeneratorSet kSR{Generator::s, Generator::r};
constexpr GeneratorSet kTR{Generator::t, Generator::r};
constexpr GeneratorSet kAll{Generator::s, Generator::t, Generator::r};

}  // namespace

TEST_CASE("identity") {
  CoxeterGroup g(GroupParams(7, 3));
  const Element e = g.neutral();
  CHECK(e.length() == 0);
  CHECK(e.is_identity());
  CHECK(e.left_descents().empty());
  CHECK(e.right_descents().empty());
  CHECK(g.multiply(e, e) == e);
  CHECK(g.inverse(e) == e);
}

TEST_CASE("multiply_gen examples") {
  CoxeterGroup g(GroupParams(7, 3));
  const Element s = g.multiply_gen(g.neutral(), Generator::s, Side::right);
  CHECK(s.to_string() == "s");
  CHECK(s.length() == 1);
  CHECK(g.multiply_gen(s, Generator::s, Side::right).is_identity());
  const Element tr = g.multiply_gen(g.element("t"), Generator::r, Side::right);
  CHECK(tr.to_string() == "tr");
  CHECK(g.multiply_gen(g.element("r"), Generator::t, Side::right) == tr);
  CHECK(g.multiply_gen(g.element("t"), Generator::s, Side::left).to_string() == "st");
}

TEST_CASE("multiply and inverse examples") {
  CoxeterGroup g(GroupParams(7, 3));
  const Element w = g.element("srt");
  CHECK(g.multiply(w, g.neutral()) == w);
  CHECK(g.multiply(g.element("s"), g.element("s")).is_identity());
  // st.ts = s(tt)s = e; the oracle reduces the concatenated word.
  const auto expected = oracle::reduced_expressions("stts", 7, 3);
  CHECK(g.multiply(g.element("st"), g.element("ts")).to_string() == oracle::shortlex_min(expected));
  CHECK(g.multiply(g.element("st"), g.element("ts")).is_identity());
  CHECK(g.inverse(g.element("st")).to_string() == "ts");
  CHECK(g.inverse(g.element("sts")).to_string() == "sts");
  CHECK(g.inverse(g.element("sts")) == g.element("sts"));
}

TEST_CASE("descent examples") {
  CoxeterGroup g(GroupParams(7, 3));
  CHECK(g.descents(g.element("sts"), Side::right) == kST);
  CHECK(g.descents(g.element("sts"), Side::left) == kST);
  CHECK(g.element("tr").right_descents() == kTR);
  CHECK(g.element("srs").right_descents() == GeneratorSet{Generator::s});
}

TEST_CASE("descent sets have at most two elements in infinite groups") {
  for (const auto& [a, b] : {std::pair{7, 3}, {5, 4}, {6, 4}}) {
    CoxeterGroup g(GroupParams(a, b));
    for (const Element w : g.enumerate_up_to(10)) {
      CHECK(w.right_descents().size() <= 2);
      CHECK(w.left_descents().size() <= 2);
      if (!w.is_identity()) CHECK(w.right_descents().size() >= 1);
    }
  }
}

TEST_CASE("longest parabolic elements") {
  CoxeterGroup g(GroupParams(7, 3));
  CHECK(g.longest_parabolic(kTR).to_string() == "tr");
  CHECK(g.longest_parabolic(kST).to_string() == "sts");
  const Element wsr = g.longest_parabolic(kSR);
  CHECK(wsr.length() == 7);
  CHECK(wsr.to_string() == "srsrsrs");
  CHECK(g.longest_parabolic(GeneratorSet{}).is_identity());
  CHECK(g.longest_parabolic(GeneratorSet{Generator::r}).to_string() == "r");
  CHECK_THROWS_AS(g.longest_parabolic(kAll), InfiniteParabolic);
  CHECK(ParabolicLabel(kSR).order(g.params()) == 14);
  CHECK_THROWS_AS(ParabolicLabel(kAll).order(g.params()), InfiniteParabolic);
}

TEST_CASE("finite groups are enumerated completely") {
  for (const auto& [a, b, order, top] :
       {std::tuple{3, 3, 24, 6}, std::tuple{4, 3, 48, 9}, std::tuple{5, 3, 120, 15}}) {
    CoxeterGroup g(GroupParams(a, b));
    CHECK(g.count_up_to(100) == static_cast<std::size_t>(order));
    CHECK(g.exhausted());
    CHECK(ParabolicLabel(kAll).order(g.params()) == order);
    const Element w0 = g.longest_parabolic(kAll);
    CHECK(w0.length() == top);
    CHECK(w0.right_descents() == kAll);
  }
}

TEST_CASE("parabolic_decompose examples") {
  CoxeterGroup g(GroupParams(7, 3));
  const auto [e1, e2] = g.parabolic_decompose(g.neutral(), kSR, Side::right);
  CHECK(e1.is_identity());
  CHECK(e2.is_identity());
  const auto [x1, u1] = g.parabolic_decompose(g.element("st"), kSR, Side::right);
  CHECK(x1.to_string() == "st");
  CHECK(u1.is_identity());
  const auto [x2, u2] = g.parabolic_decompose(g.element("ts"), kSR, Side::right);
  CHECK(x2.to_string() == "t");
  CHECK(u2.to_string() == "s");
  for (const Element w : g.enumerate_up_to(7)) {
    const auto [x, u] = g.parabolic_decompose(w, kSR, Side::right);
    CHECK(g.multiply(x, u) == w);
    CHECK(x.length() + u.length() == w.length());
    CHECK_FALSE(x.right_descents().intersects(kSR));
    const auto [v, y] = g.parabolic_decompose(w, kSR, Side::left);
    CHECK(g.multiply(v, y) == w);
    CHECK(v.length() + y.length() == w.length());
    CHECK_FALSE(y.left_descents().intersects(kSR));
  }
}

TEST_CASE("bruhat_leq examples") {
  CoxeterGroup g(GroupParams(7, 3));
  CHECK(g.bruhat_leq(g.neutral(), g.element("srt")));
  CHECK(g.bruhat_leq(g.element("s"), g.element("st")));
  CHECK_FALSE(g.bruhat_leq(g.element("r"), g.element("sts")));
  CHECK_FALSE(g.bruhat_leq(g.element("st"), g.element("s")));
  CHECK(g.lower_interval(g.element("sts")).size() == 6);
}

TEST_CASE("bruhat_leq agrees with the subword oracle for l(w) <= 5") {
  for (const auto& [a, b] : {std::pair{7, 3}, {5, 4}}) {
    CoxeterGroup g(GroupParams(a, b));
    const auto elems = g.enumerate_up_to(5);
    for (const Element y : elems) {
      const auto reduced_y = oracle::reduced_expressions(y.to_string(), a, b);
      for (const Element w : elems) {
        CHECK(g.bruhat_leq(y, w) == oracle::subword_leq(reduced_y, w.to_string()));
      }
    }
  }
}

TEST_CASE("enumerate_up_to examples and layer counts") {
  CoxeterGroup g(GroupParams(7, 3));
  CHECK(g.enumerate_up_to(0).size() == 1);
  CHECK(g.enumerate_up_to(1).size() == 4);
  // Distinct elements of length exactly n, by reducing every word with the oracle.
  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> forms;
    for (const std::string& w : oracle::all_words(n)) {
      const auto red = oracle::reduced_expressions(w, 7, 3);
      if (red.begin()->size() == static_cast<std::size_t>(n)) forms.insert(oracle::shortlex_min(red));
    }
    const auto layer = g.elements_of_length(n);
    CHECK(layer.size() == forms.size());
    std::set<std::string> got;
    for (const Element e : layer) got.insert(e.to_string());
    CHECK(got == forms);
  }
  CHECK(g.elements_of_length(2).size() == 5);
}

TEST_CASE("enumeration is ShortLex ordered by id") {
  CoxeterGroup g(GroupParams(5, 4));
  const auto elems = g.enumerate_up_to(7);
  for (std::size_t i = 1; i < elems.size(); ++i) {
    const Word& a = elems[i - 1].normal_form();
    const Word& b = elems[i].normal_form();
    CHECK(elems[i - 1] < elems[i]);
    CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
  }
}

TEST_CASE("ends_with_reduced and starts_with_reduced") {
  CoxeterGroup g(GroupParams(7, 3));
  const Element sts = g.element("sts");
  CHECK(g.ends_with_reduced(sts, {}));
  CHECK(g.ends_with_reduced(g.element("st"), parse_word("st")));
  CHECK(g.ends_with_reduced(sts, parse_word("ts")));
  CHECK(g.ends_with_reduced(sts, parse_word("st")));
  CHECK_FALSE(g.ends_with_reduced(sts, parse_word("r")));
  CHECK_FALSE(g.ends_with_reduced(g.element("s"), parse_word("ss")));
  CHECK(g.starts_with_reduced(g.element("str"), parse_word("st")));
  CHECK_FALSE(g.starts_with_reduced(g.element("str"), parse_word("ts")));
}

TEST_CASE("table agrees with the oracle on normal forms, descents and inverses") {
  for (const auto& [a, b] : {std::pair{7, 3}, {5, 5}}) {
    CoxeterGroup g(GroupParams(a, b));
    for (const Element w : g.enumerate_up_to(6)) {
      const auto red = oracle::reduced_expressions(w.to_string(), a, b);
      CHECK(oracle::shortlex_min(red) == w.to_string());
      if (w.is_identity()) continue;
      GeneratorSet left;
      GeneratorSet right;
      for (const std::string& x : red) {
        left.insert(generator_from_char(x.front()));
        right.insert(generator_from_char(x.back()));
      }
      CHECK(w.left_descents() == left);
      CHECK(w.right_descents() == right);
      const std::string nf = w.to_string();
      const std::string rev(nf.rbegin(), nf.rend());
      CHECK(g.inverse(w).to_string() == oracle::shortlex_min(oracle::reduced_expressions(rev, a, b)));
    }
  }
}

TEST_CASE("concurrent readers see a consistent table") {
  CoxeterGroup g(GroupParams(7, 3));
  std::vector<std::thread> threads;
  std::vector<std::size_t> counts(4);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    threads.emplace_back([&, i] {
      std::size_t n = 0;
      for (int len = 0; len <= 9; ++len) n += g.elements_of_length(len).size();
      counts[i] = n;
    });
  }
  for (auto& t : threads) t.join();
  for (std::size_t c : counts) CHECK(c == g.count_up_to(9));
}
