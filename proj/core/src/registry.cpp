#include "heckebound/registry.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

namespace heckebound {

namespace {

using Params = const GroupParams&;

bool case_a(Params p) { return p.theorem_case() == TheoremCase::case_a; }
bool case_b(Params p) { return p.theorem_case() == TheoremCase::case_b; }
bool both_at_least_4(Params p) { return p.m_sr() >= 4 && p.m_st() >= 4; }
bool in_theorem(Params p) { return p.theorem_case() != TheoremCase::out_of_theorem; }
bool always(Params) { return true; }

constexpr const char* kCaseA = "m_sr >= 7 and m_st = 3";
constexpr const char* kCaseB = "m_sr >= 5 and m_st >= 4";
constexpr const char* kBoth4 = "m_sr >= 4 and m_st >= 4";
constexpr const char* kInTheorem = "m_sr >= 7 and m_st = 3, or m_sr >= 5 and m_st >= 4";
constexpr const char* kAlways = "none";

constexpr GeneratorSet kS{Generator::s};
constexpr GeneratorSet kT{Generator::t};
constexpr GeneratorSet kR{Generator::r};
constexpr GeneratorSet kST{Generator::s, Generator::t};
constexpr GeneratorSet kSR{Generator::s, Generator::r};
constexpr GeneratorSet kTR{Generator::t, Generator::r};

std::optional<int> theorem_bound(Params p) {
  if (!in_theorem(p)) return std::nullopt;
  return p.degree_bound();
}

CheckSpec suffix(std::string id, std::string_view a, std::string_view b, bool (*applies)(Params),
                 const char* hypothesis) {
  SuffixPattern pattern{parse_word(a), parse_word(b)};
  CheckSpec spec;
  spec.id = std::move(id);
  spec.family = "suffix";
  spec.statement = "no w with w = (w1)(" + std::string(a) + ") = (w2)(" + std::string(b) + ")";
  spec.hypothesis = hypothesis;
  spec.applies = applies;
  spec.length = LengthKind::single;
  spec.run = [pattern](Verifier& v, int n) { return v.check_no_double_suffix(pattern, n); };
  spec.replay = [pattern](Verifier& v, const WordTuple& w, int) { return v.replay_suffix(pattern, w); };
  return spec;
}

CheckSpec sandwich(std::string id, GeneratorSet gens, int min_length, bool (*applies)(Params),
                   const char* hypothesis) {
  const ParabolicLabel label(gens);
  const std::string names = to_string(gens);
  CheckSpec spec;
  spec.id = std::move(id);
  spec.family = "sandwich";
  spec.statement = "w in W_" + names + ", l(w) >= " + std::to_string(min_length) +
                   ", no generator of " + names +
                   " in R(x) or L(y): l(xwy) = l(x)+l(w)+l(y), R(xwy) = R(wy), L(xwy) = L(xw)";
  spec.hypothesis = hypothesis;
  spec.applies = applies;
  spec.run = [label, min_length](Verifier& v, int n) { return v.check_sandwich(label, min_length, n); };
  spec.replay = [label, min_length](Verifier& v, const WordTuple& w, int) {
    return v.replay_sandwich(label, min_length, w);
  };
  return spec;
}

// A factor given either by a word or as the longest element of a rank-2
// parabolic.
struct Factor {
  std::string word;
  GeneratorSet longest;

  static Factor of(std::string w) { return {std::move(w), {}}; }
  static Factor longest_of(GeneratorSet gens) { return {"", gens}; }

  Element resolve(const Verifier& v) const {
    if (!longest.empty()) return v.group().longest_parabolic(ParabolicLabel(longest));
    return v.group().element(word);
  }
  std::string describe() const {
    if (!longest.empty()) {
      std::string sub;
      for (Generator g : kGenerators) {
        if (longest.contains(g)) sub += to_char(g);
      }
      return "w_" + sub;
    }
    return word;
  }
};

CheckSpec ladder(std::string id, DescentCondition on_x, DescentCondition on_y, Factor x_suffix,
                 Factor y_prefix, std::function<int(Params)> bound, std::string bound_text,
                 bool (*applies)(Params), const char* hypothesis) {
  auto build = [=](const Verifier& v) {
    return LadderPattern{on_x, on_y, x_suffix.resolve(v), y_prefix.resolve(v), bound(v.params())};
  };
  std::string conditions;
  for (const std::string& c : {on_x.describe("R(x)"), on_y.describe("L(y)")}) {
    if (c.empty()) continue;
    conditions += conditions.empty() ? c : ", " + c;
  }
  const std::string left = "x" + (x_suffix.word.empty() && x_suffix.longest.empty() ? "" : " " + x_suffix.describe());
  const std::string right =
      (y_prefix.word.empty() && y_prefix.longest.empty() ? "" : y_prefix.describe() + " ") + "y";
  CheckSpec spec;
  spec.id = std::move(id);
  spec.family = "ladder";
  spec.statement = (conditions.empty() ? "all x, y" : conditions) + ": deg f_{" + left + ", " + right +
                   ", z} <= " + bound_text;
  spec.hypothesis = hypothesis;
  spec.applies = applies;
  spec.run = [build](Verifier& v, int n) { return v.check_degree_pattern(build(v), n); };
  spec.replay = [build](Verifier& v, const WordTuple& w, int) {
    return v.replay_degree_pattern(build(v), w);
  };
  return spec;
}

std::function<int(Params)> constant(int c) {
  return [c](Params) { return c; };
}

Element at(Verifier& v, const Word& w) { return v.group().element(w); }

std::vector<CheckSpec> build_registry() {
  using DC = DescentCondition;
  std::vector<CheckSpec> r;

  r.push_back(suffix("lemma-3.1", "st", "sr", case_a, kCaseA));
  r.push_back(suffix("corollary-3.2", "srs", "t", case_a, kCaseA));
  r.push_back(suffix("corollary-3.3", "srsr", "t", case_a, kCaseA));
  r.push_back(suffix("lemma-3.4", "ts", "r", case_a, kCaseA));
  r.push_back(sandwich("lemma-3.5", kSR, 5, case_a, kCaseA));
  r.push_back(ladder("lemma-3.6", DC::excludes(kST), DC::excludes(kST), Factor::of("sts"), Factor::of(""),
                     constant(1), "1", case_a, kCaseA));
  r.push_back(ladder("lemma-3.7", DC::excludes(kTR), DC::excludes(kTR), Factor::of("tr"), Factor::of(""),
                     constant(2), "2", case_a, kCaseA));
  r.push_back(ladder("corollary-3.8", DC::equals(kR), DC::equals(kT), Factor::longest_of(kST),
                     Factor::longest_of(kSR), constant(2), "2", case_a, kCaseA));
  r.push_back(ladder("lemma-3.9", DC::equals(kS), DC::equals(kT), Factor::of("tr"), Factor::longest_of(kSR),
                     constant(3), "3", case_a, kCaseA));
  r.push_back(ladder("lemma-3.10", DC::equals(kS), DC::equals(kR), Factor::of("tr"), Factor::longest_of(kST),
                     constant(4), "4", case_a, kCaseA));

  {
    CheckSpec spec;
    spec.id = "lemma-3.11";
    spec.family = "parabolic";
    spec.statement =
        "w, u in W_{s,r}: f_{w,u,v} = 0 for v outside W_{s,r}, deg f_{w,u,v} <= l(v), equality at "
        "w = u = v = w_sr";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.length = LengthKind::none;
    spec.run = [](Verifier& v, int) { return v.check_parabolic(); };
    spec.replay = [](Verifier& v, const WordTuple& w, int) { return v.replay_parabolic(w); };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "lemma-3.12";
    spec.family = "coset";
    spec.statement =
        "x = x1 w, y = u y1 with x1, y1 minimal in xW_{s,r}, W_{s,r}y, l(w), l(u) >= 1, "
        "l(w)+l(u) >= 3: deg f_{x,y,z} <= m_sr";
    spec.hypothesis = kCaseA;
    spec.applies = case_a;
    spec.run = [](Verifier& v, int n) { return v.check_coset_product(n); };
    spec.replay = [](Verifier& v, const WordTuple& w, int) { return v.replay_coset_product(w); };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "theorem-3.13";
    spec.family = "theorem";
    spec.statement = "all x, y: deg f_{x,y,z} <= m_sr";
    spec.hypothesis = kCaseA;
    spec.applies = case_a;
    spec.run = [](Verifier& v, int n) { return v.check_degree_bound(n, v.params().m_sr()); };
    spec.replay = [](Verifier& v, const WordTuple& w, int) {
      return v.replay_degree_bound(v.params().m_sr(), w);
    };
    r.push_back(std::move(spec));
  }

  r.push_back(suffix("lemma-4.1", "r", "ts", both_at_least_4, kBoth4));
  r.push_back(suffix("corollary-4.2", "t", "rs", both_at_least_4, kBoth4));
  r.push_back(suffix("lemma-4.3a", "r", "sts", both_at_least_4, kBoth4));
  r.push_back(suffix("lemma-4.3b", "r", "tst", both_at_least_4, kBoth4));
  r.push_back(suffix("lemma-4.3c", "t", "srs", both_at_least_4, kBoth4));
  r.push_back(suffix("lemma-4.3d", "t", "rsr", both_at_least_4, kBoth4));
  r.push_back(suffix("lemma-4.4", "sr", "st", both_at_least_4, kBoth4));
  r.push_back(sandwich("lemma-4.5/alpha=t", kST, 4, both_at_least_4, kBoth4));
  r.push_back(sandwich("lemma-4.5/alpha=r", kSR, 4, both_at_least_4, kBoth4));
  r.push_back(ladder("lemma-4.6", DC::excludes(kTR), DC::excludes(kTR), Factor::of("tr"), Factor::of(""),
                     constant(1), "1", case_b, kCaseB));
  r.push_back(ladder("lemma-4.7/alpha=t", DC::equals(kT), DC::equals(kS), Factor::longest_of(kSR),
                     Factor::of("tr"), constant(2), "2", case_b, kCaseB));
  r.push_back(ladder("lemma-4.7/alpha=r", DC::equals(kR), DC::equals(kS), Factor::longest_of(kST),
                     Factor::of("tr"), constant(2), "2", case_b, kCaseB));
  r.push_back(ladder("lemma-4.8", DC::any(), DC::any(), Factor::of("tr"), Factor::of(""),
                     [](Params p) { return std::max(p.m_sr(), p.m_st()); }, "max(m_sr, m_st)", case_b,
                     kCaseB));
  {
    CheckSpec spec;
    spec.id = "theorem-2.1";
    spec.family = "theorem";
    spec.statement = "all x, y: deg f_{x,y,z} <= m_sr in case (a), <= max(m_sr, m_st) in case (b)";
    spec.hypothesis = kInTheorem;
    spec.applies = in_theorem;
    spec.run = [](Verifier& v, int n) { return v.check_degree_bound(n, theorem_bound(v.params())); };
    spec.replay = [](Verifier& v, const WordTuple& w, int) {
      const auto bound = theorem_bound(v.params());
      return bound && v.replay_degree_bound(*bound, w);
    };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "scan-degrees";
    spec.family = "scan";
    spec.statement = "histogram of max_z deg f_{x,y,z} over all pairs, with per-length maxima";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.asserting = false;
    spec.run = [](Verifier& v, int n) { return v.scan_degrees(n); };
    r.push_back(std::move(spec));
  }

  // Invariants of the structure constants.
  {
    CheckSpec spec;
    spec.id = "fact-1.1a-positivity";
    spec.family = "invariant";
    spec.statement = "f_{w,u,v} has non-negative coefficients in xi and degree <= min(l(w), l(u), l(v))";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.length = LengthKind::aux;
    spec.run = [](Verifier& v, int n) { return v.check_f_positivity(n); };
    spec.replay = [](Verifier& v, const WordTuple& t, int) {
      if (t.size() != 3) return false;
      const Element w = at(v, t[0]), u = at(v, t[1]), x = at(v, t[2]);
      const XiPoly f = f_coeff(w, u, x);
      return !f.has_nonnegative_coefficients() ||
             f.degree() > std::min({w.length(), u.length(), x.length()});
    };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "fact-1.1a-cyclic";
    spec.family = "invariant";
    spec.statement = "f_{w,u,v} = f_{u,v^-1,w^-1} = f_{v^-1,w,u^-1}";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.length = LengthKind::aux;
    spec.run = [](Verifier& v, int n) { return v.check_cyclic_symmetry(n); };
    spec.replay = [](Verifier& v, const WordTuple& t, int) {
      if (t.size() != 3) return false;
      const CoxeterGroup& g = v.group();
      const Element w = at(v, t[0]), u = at(v, t[1]), x = at(v, t[2]);
      const XiPoly f = f_coeff(w, u, x);
      return f != f_coeff(u, g.inverse(x), g.inverse(w)) || f != f_coeff(g.inverse(x), w, g.inverse(u));
    };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "fact-1.1b-inverse";
    spec.family = "invariant";
    spec.statement = "f_{w,u,v} = f_{u^-1,w^-1,v^-1}";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.length = LengthKind::aux;
    spec.run = [](Verifier& v, int n) { return v.check_inverse_symmetry(n); };
    spec.replay = [](Verifier& v, const WordTuple& t, int) {
      if (t.size() != 3) return false;
      const CoxeterGroup& g = v.group();
      const Element w = at(v, t[0]), u = at(v, t[1]), x = at(v, t[2]);
      return f_coeff(w, u, x) != f_coeff(g.inverse(u), g.inverse(w), g.inverse(x));
    };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "fact-1.1c-descents";
    spec.family = "invariant";
    spec.statement = "W_{R(w)} and W_{L(w)} are finite";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.length = LengthKind::single;
    spec.run = [](Verifier& v, int n) { return v.check_descent_finiteness(n); };
    spec.replay = [](Verifier& v, const WordTuple& t, int) {
      if (t.size() != 1) return false;
      const Element w = at(v, t[0]);
      return !ParabolicLabel(w.right_descents()).is_finite(v.params()) ||
             !ParabolicLabel(w.left_descents()).is_finite(v.params());
    };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "fact-1.1d-parabolic-factor";
    spec.family = "invariant";
    spec.statement = "I in R(w): l(w w_I) + l(w_I) = l(w); I in L(w): l(w_I w) + l(w_I) = l(w)";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.length = LengthKind::single;
    spec.run = [](Verifier& v, int n) { return v.check_longest_parabolic_factor(n); };
    spec.replay = [](Verifier& v, const WordTuple& t, int) {
      const CoxeterGroup& g = v.group();
      auto is_longest_in = [&](Element cand, GeneratorSet within) {
        for (std::uint8_t bits = 1; bits < 8; ++bits) {
          const GeneratorSet sub = GeneratorSet::from_bits(bits);
          if ((sub & within) != sub || !ParabolicLabel(sub).is_finite(v.params())) continue;
          if (g.longest_parabolic(ParabolicLabel(sub)) == cand) return true;
        }
        return false;
      };
      if (t.size() == 1) {
        const Element w = at(v, t[0]);
        return !ParabolicLabel(w.right_descents()).is_finite(v.params()) ||
               !ParabolicLabel(w.left_descents()).is_finite(v.params());
      }
      if (t.size() != 2) return false;
      const Element a = at(v, t[0]), b = at(v, t[1]);
      const Element ab = g.multiply(a, b);
      const bool right = is_longest_in(b, a.right_descents()) && ab.length() + b.length() != a.length();
      const bool left = is_longest_in(a, b.left_descents()) && ab.length() + a.length() != b.length();
      return right || left;
    };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "associativity";
    spec.family = "invariant";
    spec.statement = "(T~_w T~_u) T~_x = T~_w (T~_u T~_x) on seeded random triples";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.length = LengthKind::aux;
    spec.run = [](Verifier& v, int n) { return v.check_associativity(n); };
    spec.replay = [](Verifier& v, const WordTuple& t, int) {
      if (t.size() != 3) return false;
      const Element w = at(v, t[0]), u = at(v, t[1]), x = at(v, t[2]);
      return mul_element_right(product(w, u), x) != product(HeckeVector::basis(w), product(u, x));
    };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "length-additive";
    spec.family = "invariant";
    spec.statement = "l(wu) = l(w) + l(u) implies T~_w T~_u = T~_{wu}";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.length = LengthKind::aux;
    spec.run = [](Verifier& v, int n) { return v.check_length_additive(n); };
    spec.replay = [](Verifier& v, const WordTuple& t, int) {
      if (t.size() != 2) return false;
      const Element w = at(v, t[0]), u = at(v, t[1]);
      const Element wu = v.group().multiply(w, u);
      return wu.length() == w.length() + u.length() && product(w, u) != HeckeVector::basis(wu);
    };
    r.push_back(std::move(spec));
  }

  // Kazhdan-Lusztig data.
  {
    CheckSpec spec;
    spec.id = "kl-window";
    spec.family = "kl";
    spec.statement =
        "P_{w,w} = 1, 2 deg P_{y,w} <= l(w)-l(y)-1, P_{y,w} != 0 iff y <= w, C_w unitriangular, "
        "h_{s,s,s} = q^(1/2) + q^(-1/2)";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.length = LengthKind::aux;
    spec.run = [](Verifier& v, int n) { return v.check_kl_window(n); };
    spec.replay = [](Verifier& v, const WordTuple& t, int) {
      KLTable& kl = v.kl();
      const CoxeterGroup& g = v.group();
      if (t.size() == 1) {
        const Element w = at(v, t[0]);
        std::vector<Element> support;
        for (const auto& term : kl.column(w)->terms()) support.push_back(term.first);
        return support != g.lower_interval(w);
      }
      if (t.size() == 2) {
        const Element y = at(v, t[0]), w = at(v, t[1]);
        const QPoly p = kl.kl_poly(y, w);
        const HalfLaurent c = kl.c_basis_tilde(w)->coefficient(y);
        if (y == w) return p != QPoly(1) || c != HalfLaurent(1);
        return 2 * p.degree() > w.length() - y.length() - 1 || (!c.is_zero() && c.degree() >= 0) ||
               (!c.is_zero() && !g.bruhat_leq(y, w));
      }
      if (t.size() == 3) {
        const Element e = at(v, t[0]);
        const HalfLaurent expected = HalfLaurent::monomial(1) + HalfLaurent::monomial(-1);
        return kl.h_coeffs(e, e) != HalfHeckeVector::basis(e, expected);
      }
      return false;
    };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "a-window";
    spec.family = "kl";
    spec.statement =
        "a_N(v) = max deg h_{w,u,v} over l(w), l(u) <= N is at most the degree bound and at most "
        "the largest deg f in the same window";
    spec.hypothesis = kInTheorem;
    spec.applies = in_theorem;
    spec.length = LengthKind::aux;
    spec.run = [](Verifier& v, int n) { return v.check_a_window(n, theorem_bound(v.params())); };
    spec.replay = [](Verifier& v, const WordTuple& t, int n) {
      if (t.size() != 1) return false;
      const Element x = at(v, t[0]);
      const int a = compute_a_window(v.kl(), n, v.options().jobs).value(x);
      const int f_max = v.check_degree_bound(n, std::nullopt).max_degree_seen.value_or(0);
      const auto bound = theorem_bound(v.params());
      return (bound && a > *bound) || a > f_max;
    };
    r.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "tits-consistency";
    spec.family = "oracle";
    spec.statement = "the element table agrees with braid-move reduction on elements and on all short words";
    spec.hypothesis = kAlways;
    spec.applies = always;
    spec.length = LengthKind::single;
    spec.run = [](Verifier& v, int n) { return v.check_tits_consistency(n); };
    spec.replay = [](Verifier& v, const WordTuple& t, int) {
      if (t.size() != 1) return false;
      const Element w = at(v, t[0]);
      const Reduction red = v.word_problem().reduce(t[0]);
      return red.normal_form != w.normal_form() || red.left_descents != w.left_descents() ||
             red.right_descents != w.right_descents();
    };
    r.push_back(std::move(spec));
  }
  return r;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = build_registry();
  return registry;
}

const CheckSpec* find_check(std::string_view id) {
  for (const CheckSpec& spec : check_registry()) {
    if (spec.id == id) return &spec;
  }
  return nullptr;
}

std::vector<const CheckSpec*> select_checks(const std::vector<std::string>& selectors) {
  std::vector<const CheckSpec*> out;
  auto add = [&](const CheckSpec* spec) {
    if (std::find(out.begin(), out.end(), spec) == out.end()) out.push_back(spec);
  };
  for (const std::string& sel : selectors) {
    if (sel == "all") {
      for (const CheckSpec& spec : check_registry()) add(&spec);
      continue;
    }
    if (sel == "theorem") {
      add(find_check("theorem-2.1"));
      continue;
    }
    if (const CheckSpec* spec = find_check(sel)) {
      add(spec);
      continue;
    }
    bool matched = false;
    for (const CheckSpec& spec : check_registry()) {
      if (spec.family == sel || spec.id.rfind(sel + "/", 0) == 0) {
        add(&spec);
        matched = true;
      }
    }
    if (!matched) throw UnknownCheck("unknown check id or family: " + sel);
  }
  return out;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      const unsigned long na = std::stoul(std::string(a.substr(i, ei - i)));
      const unsigned long nb = std::stoul(std::string(b.substr(j, ej - j)));
      if (na != nb) return na < nb;
      i = ei;
      j = ej;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

std::vector<const CheckSpec*> sorted_checks() {
  std::vector<const CheckSpec*> out;
  for (const CheckSpec& spec : check_registry()) out.push_back(&spec);
  std::sort(out.begin(), out.end(),
            [](const CheckSpec* a, const CheckSpec* b) { return natural_less(a->id, b->id); });
  return out;
}

int length_for(const CheckSpec& spec, const RunLengths& lengths) {
  switch (spec.length) {
    case LengthKind::pair:
      return lengths.pair;
    case LengthKind::single:
      return lengths.single;
    case LengthKind::aux:
      return lengths.aux;
    case LengthKind::none:
      return 0;
  }
  return 0;
}

CheckReport run_check(const CheckSpec& spec, Verifier& verifier, const RunLengths& lengths, bool strict) {
  const bool met = spec.applies(verifier.params());
  if (!met && strict) {
    throw HypothesisMismatch(spec.id + " requires " + spec.hypothesis + " but the group is " +
                             to_string(verifier.params()));
  }
  const auto start = std::chrono::steady_clock::now();
  CheckReport report = spec.run(verifier, length_for(spec, lengths));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.id = spec.id;
  report.family = spec.family;
  report.statement = spec.statement;
  report.hypothesis_met = met;
  if (!met) report.notes.push_back("outside the hypothesis (" + spec.hypothesis + "); recorded, not asserted");
  if (!met || !spec.asserting) report.status = CheckStatus::advisory;
  return report;
}

}  // namespace heckebound
