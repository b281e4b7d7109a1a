#include "heckebound/verifier.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_map>

#include "heckebound/parallel.hpp"

namespace heckebound {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::advisory:
      return "advisory";
  }
  return "unknown";
}

bool DescentCondition::holds(GeneratorSet descents) const noexcept {
  switch (rule) {
    case Rule::any:
      return true;
    case Rule::excludes:
      return !descents.intersects(set);
    case Rule::equals:
      return descents == set;
  }
  return false;
}

std::string DescentCondition::describe(const std::string& set_name) const {
  switch (rule) {
    case Rule::any:
      return "";
    case Rule::excludes: {
      std::string names;
      for (Generator g : kGenerators) {
        if (!set.contains(g)) continue;
        if (!names.empty()) names += ",";
        names += to_char(g);
      }
      return names + " not in " + set_name;
    }
    case Rule::equals:
      return set_name + " = " + to_string(set);
  }
  return "";
}

namespace {

constexpr GeneratorSet kSR = GeneratorSet::from_bits(0b101);

bool in_parabolic(Element v, GeneratorSet gens) {
  const Word& nf = v.normal_form();
  return std::all_of(nf.begin(), nf.end(), [&](Generator g) { return gens.contains(g); });
}

// Keeps the first `cap` items and counts all of them.
struct Capped {
  std::vector<WordTuple> items;
  std::uint64_t count = 0;

  void add(WordTuple t, std::size_t cap) {
    ++count;
    if (items.size() < cap) items.push_back(std::move(t));
  }
  void merge(Capped&& o, std::size_t cap) {
    count += o.count;
    for (auto& t : o.items) {
      if (items.size() >= cap) break;
      items.push_back(std::move(t));
    }
  }
};

WordTuple words_of(std::initializer_list<Element> elems) {
  WordTuple t;
  for (const Element e : elems) t.push_back(e.normal_form());
  return t;
}

int max_length_of(const std::vector<Element>& elems) {
  int best = 0;
  for (const Element e : elems) best = std::max(best, e.length());
  return best;
}

}  // namespace

Verifier::Verifier(const CoxeterGroup& group, VerifierOptions options)
    : group_(&group), options_(options), kl_(group), word_problem_(group.params(), options.word_problem) {}

CheckReport Verifier::make_report(int length_cap) const {
  CheckReport r;
  r.m_sr = params().m_sr();
  r.m_st = params().m_st();
  r.length_cap = length_cap;
  return r;
}

void Verifier::finish(CheckReport& report) const {
  report.status = report.witness_count > 0 ? CheckStatus::fail : CheckStatus::pass;
}

Element Verifier::longest(Generator g, Generator h) const {
  return group_->longest_parabolic(ParabolicLabel(GeneratorSet{g, h}));
}

std::vector<Element> Verifier::dihedral(Generator g, Generator h) const {
  std::vector<Element> out;
  const int m = params().bond(g, h);
  for (int k = 0; k <= m; ++k) {
    out.push_back(group_->element(alternating(g, h, k)));
    out.push_back(group_->element(alternating(h, g, k)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Single elements

CheckReport Verifier::check_no_double_suffix(const SuffixPattern& pattern, int length_cap) const {
  CheckReport report = make_report(length_cap);
  Capped found;
  for (const Element w : group_->enumerate_up_to(length_cap)) {
    ++report.items_scanned;
    if (group_->ends_with_reduced(w, pattern.a) && group_->ends_with_reduced(w, pattern.b)) {
      found.add(words_of({w}), options_.witness_cap);
    }
  }
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

bool Verifier::replay_suffix(const SuffixPattern& pattern, const WordTuple& witness) const {
  if (witness.size() != 1) return false;
  const Element w = group_->element(witness[0]);
  return group_->ends_with_reduced(w, pattern.a) && group_->ends_with_reduced(w, pattern.b);
}

CheckReport Verifier::check_descent_finiteness(int length_cap) const {
  CheckReport report = make_report(length_cap);
  Capped found;
  for (const Element w : group_->enumerate_up_to(length_cap)) {
    ++report.items_scanned;
    const bool ok = ParabolicLabel(w.right_descents()).is_finite(params()) &&
                    ParabolicLabel(w.left_descents()).is_finite(params());
    if (!ok) found.add(words_of({w}), options_.witness_cap);
  }
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

CheckReport Verifier::check_longest_parabolic_factor(int length_cap) const {
  CheckReport report = make_report(length_cap);
  Capped found;
  std::int64_t subsets = 0;
  for (const Element w : group_->enumerate_up_to(length_cap)) {
    ++report.items_scanned;
    for (const Side side : {Side::right, Side::left}) {
      const GeneratorSet d = w.descents(side);
      for (std::uint8_t bits = 1; bits < 8; ++bits) {
        const GeneratorSet sub = GeneratorSet::from_bits(bits);
        if ((sub & d) != sub) continue;
        const ParabolicLabel label(sub);
        if (!label.is_finite(params())) {
          found.add(words_of({w}), options_.witness_cap);
          continue;
        }
        ++subsets;
        const Element w_i = group_->longest_parabolic(label);
        const Element rest =
            side == Side::right ? group_->multiply(w, w_i) : group_->multiply(w_i, w);
        if (rest.length() + w_i.length() != w.length()) {
          found.add(side == Side::right ? words_of({w, w_i}) : words_of({w_i, w}), options_.witness_cap);
        }
      }
    }
  }
  report.counters["subsets_checked"] = subsets;
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

CheckReport Verifier::check_tits_consistency(int length_cap) {
  const int cap = std::min<int>(length_cap, static_cast<int>(word_problem_.options().max_word_length));
  CheckReport report = make_report(cap);
  Capped found;
  std::int64_t words = 0;
  for (const Element w : group_->enumerate_up_to(cap)) {
    ++report.items_scanned;
    const Reduction red = word_problem_.reduce(w.normal_form());
    if (red.normal_form != w.normal_form() || red.left_descents != w.left_descents() ||
        red.right_descents != w.right_descents()) {
      found.add(words_of({w}), options_.witness_cap);
    }
  }
  // Every word, reduced or not, up to a smaller length.
  const int word_cap = std::min(cap, 7);
  Word word;
  std::function<void()> visit = [&] {
    ++words;
    if (word_problem_.reduce(word).normal_form != group_->element(word).normal_form()) {
      found.add({word}, options_.witness_cap);
    }
    if (static_cast<int>(word.size()) == word_cap) return;
    for (const Generator g : kGenerators) {
      word.push_back(g);
      visit();
      word.pop_back();
    }
  };
  visit();
  report.counters["words_checked"] = words;
  report.counters["word_length_cap"] = word_cap;
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

// ---------------------------------------------------------------------------
// Sandwich

CheckReport Verifier::check_sandwich(ParabolicLabel label, int min_w_length, int length_cap) const {
  CheckReport report = make_report(length_cap);
  const GeneratorSet gens = label.generators();
  const Generator g = gens.first();
  GeneratorSet rest = gens;
  rest.erase(g);

  std::vector<Element> middles;
  for (const Element w : dihedral(g, rest.first())) {
    if (w.length() >= min_w_length) middles.push_back(w);
  }
  std::vector<Element> xs;
  std::vector<Element> ys;
  for (const Element e : group_->enumerate_up_to(length_cap)) {
    if (!e.right_descents().intersects(gens)) xs.push_back(e);
    if (!e.left_descents().intersects(gens)) ys.push_back(e);
  }
  group_->ensure_length(max_length_of(xs) + max_length_of(middles) + max_length_of(ys) + 1);

  const std::size_t cap = options_.witness_cap;
  struct Row {
    Capped found;
    std::array<std::int64_t, 3> parts{};
  };
  auto rows = parallel_map(xs.size(), options_.jobs, [&](std::size_t i) {
    Row row;
    const Element x = xs[i];
    for (const Element w : middles) {
      const Element xw = group_->multiply(x, w);
      for (const Element y : ys) {
        const Element wy = group_->multiply(w, y);
        const Element xwy = group_->multiply(xw, y);
        const bool additive = xwy.length() == x.length() + w.length() + y.length();
        const bool right = xwy.right_descents() == wy.right_descents();
        const bool left = xwy.left_descents() == xw.left_descents();
        row.parts[0] += additive ? 0 : 1;
        row.parts[1] += right ? 0 : 1;
        row.parts[2] += left ? 0 : 1;
        if (!(additive && right && left)) row.found.add(words_of({x, w, y}), cap);
      }
    }
    return row;
  });

  Capped found;
  std::array<std::int64_t, 3> parts{};
  for (auto& row : rows) {
    for (std::size_t k = 0; k < parts.size(); ++k) parts[k] += row.parts[k];
    found.merge(std::move(row.found), cap);
  }
  report.items_scanned = static_cast<std::uint64_t>(xs.size()) * middles.size() * ys.size();
  report.counters["middle_elements"] = static_cast<std::int64_t>(middles.size());
  report.counters["length_not_additive"] = parts[0];
  report.counters["right_descents_differ"] = parts[1];
  report.counters["left_descents_differ"] = parts[2];
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

bool Verifier::replay_sandwich(ParabolicLabel label, int min_w_length, const WordTuple& witness) const {
  if (witness.size() != 3) return false;
  const Element x = group_->element(witness[0]);
  const Element w = group_->element(witness[1]);
  const Element y = group_->element(witness[2]);
  const GeneratorSet gens = label.generators();
  if (!in_parabolic(w, gens) || w.length() < min_w_length) return false;
  if (x.right_descents().intersects(gens) || y.left_descents().intersects(gens)) return false;
  const Element xw = group_->multiply(x, w);
  const Element wy = group_->multiply(w, y);
  const Element xwy = group_->multiply(xw, y);
  return xwy.length() != x.length() + w.length() + y.length() ||
         xwy.right_descents() != wy.right_descents() || xwy.left_descents() != xw.left_descents();
}

// ---------------------------------------------------------------------------
// Pair scans

struct Verifier::PairScan {
  std::uint64_t pairs = 0;
  std::optional<int> max_degree;
  std::map<int, std::uint64_t> histogram;
  std::map<std::pair<int, int>, int> strata;
  Capped extremal;
  Capped witnesses;
};

Verifier::PairScan Verifier::scan_pairs(const std::vector<Element>& xs, const std::vector<Element>& ys,
                                        const std::function<Element(Element)>& left,
                                        const std::function<Element(Element)>& right,
                                        const std::function<bool(Element, Element)>& keep,
                                        std::optional<int> bound) const {
  std::vector<Element> lefts;
  std::vector<Element> rights;
  lefts.reserve(xs.size());
  rights.reserve(ys.size());
  for (const Element x : xs) lefts.push_back(left(x));
  for (const Element y : ys) rights.push_back(right(y));
  group_->ensure_length(max_length_of(lefts) + max_length_of(rights));

  const std::size_t cap = options_.witness_cap;
  auto rows = parallel_map(xs.size(), options_.jobs, [&](std::size_t i) {
    PairScan row;
    std::optional<ProductRow> memo;
    if (options_.memo) memo.emplace(lefts[i]);
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (keep && !keep(xs[i], ys[j])) continue;
      HeckeVector fresh;
      const HeckeVector* vec = nullptr;
      if (memo) {
        vec = &memo->times(rights[j]);
      } else {
        fresh = product(lefts[i], rights[j]);
        vec = &fresh;
      }
      const int deg = max_degree(*vec);
      ++row.pairs;
      ++row.histogram[deg];
      const auto stratum = std::make_pair(xs[i].length(), ys[j].length());
      auto [it, inserted] = row.strata.emplace(stratum, deg);
      if (!inserted) it->second = std::max(it->second, deg);

      if (!row.max_degree || deg > *row.max_degree) {
        row.max_degree = deg;
        row.extremal = Capped{};
      }
      if (deg == *row.max_degree) row.extremal.add(words_of({xs[i], ys[j]}), cap);

      if (bound && deg > *bound) {
        for (const auto& [z, f] : vec->terms()) {
          if (f.degree() > *bound) {
            row.witnesses.add(words_of({xs[i], ys[j], z}), cap);
            break;
          }
        }
      }
    }
    return row;
  });

  PairScan total;
  for (const PairScan& row : rows) {
    if (row.max_degree && (!total.max_degree || *row.max_degree > *total.max_degree)) {
      total.max_degree = row.max_degree;
    }
  }
  for (PairScan& row : rows) {
    total.pairs += row.pairs;
    for (const auto& [d, n] : row.histogram) total.histogram[d] += n;
    for (const auto& [k, d] : row.strata) {
      auto [it, inserted] = total.strata.emplace(k, d);
      if (!inserted) it->second = std::max(it->second, d);
    }
    if (row.max_degree && row.max_degree == total.max_degree) total.extremal.merge(std::move(row.extremal), cap);
    total.witnesses.merge(std::move(row.witnesses), cap);
  }
  return total;
}

namespace {

void absorb(CheckReport& report, auto&& scan, bool with_strata) {
  report.items_scanned = scan.pairs;
  report.max_degree_seen = scan.max_degree;
  report.histogram = std::move(scan.histogram);
  if (with_strata) report.strata = std::move(scan.strata);
  report.extremal = std::move(scan.extremal.items);
  report.counters["extremal_pairs"] = static_cast<std::int64_t>(scan.extremal.count);
  report.witnesses = std::move(scan.witnesses.items);
  report.witness_count = scan.witnesses.count;
}

}  // namespace

CheckReport Verifier::check_degree_pattern(const LadderPattern& pattern, int length_cap) const {
  CheckReport report = make_report(length_cap);
  std::vector<Element> xs;
  std::vector<Element> ys;
  for (const Element e : group_->enumerate_up_to(length_cap)) {
    if (pattern.on_x.holds(e.right_descents())) xs.push_back(e);
    if (pattern.on_y.holds(e.left_descents())) ys.push_back(e);
  }
  auto scan = scan_pairs(
      xs, ys, [&](Element x) { return group_->multiply(x, pattern.x_suffix); },
      [&](Element y) { return group_->multiply(pattern.y_prefix, y); }, {}, pattern.bound);
  report.bound = pattern.bound;
  absorb(report, scan, false);
  finish(report);
  return report;
}

bool Verifier::replay_degree_pattern(const LadderPattern& pattern, const WordTuple& witness) const {
  if (witness.size() != 3) return false;
  const Element x = group_->element(witness[0]);
  const Element y = group_->element(witness[1]);
  const Element z = group_->element(witness[2]);
  if (!pattern.on_x.holds(x.right_descents()) || !pattern.on_y.holds(y.left_descents())) return false;
  const Element a = group_->multiply(x, pattern.x_suffix);
  const Element b = group_->multiply(pattern.y_prefix, y);
  return f_coeff(a, b, z).degree() > pattern.bound;
}

CheckReport Verifier::check_degree_bound(int length_cap, std::optional<int> bound) const {
  CheckReport report = make_report(length_cap);
  const auto elems = group_->enumerate_up_to(length_cap);
  auto id = [](Element e) { return e; };
  auto scan = scan_pairs(elems, elems, id, id, {}, bound);
  report.bound = bound;
  absorb(report, scan, true);
  finish(report);
  return report;
}

bool Verifier::replay_degree_bound(int bound, const WordTuple& witness) const {
  if (witness.size() != 3) return false;
  return f_coeff(group_->element(witness[0]), group_->element(witness[1]), group_->element(witness[2]))
             .degree() > bound;
}

CheckReport Verifier::scan_degrees(int length_cap) const {
  CheckReport report = check_degree_bound(length_cap, std::nullopt);
  report.status = CheckStatus::advisory;
  return report;
}

namespace {

// Lengths of the W_{s,r} parts of x = x1 w (right) and y = u y1 (left).
std::pair<int, int> coset_parts(const CoxeterGroup& g, Element x, Element y) {
  const int w = g.parabolic_decompose(x, ParabolicLabel(kSR), Side::right).second.length();
  const int u = g.parabolic_decompose(y, ParabolicLabel(kSR), Side::left).first.length();
  return {w, u};
}

bool coset_hypothesis(int w, int u) { return w >= 1 && u >= 1 && w + u >= 3; }

}  // namespace

CheckReport Verifier::check_coset_product(int length_cap) const {
  CheckReport report = make_report(length_cap);
  const auto elems = group_->enumerate_up_to(length_cap);
  std::unordered_map<std::uint32_t, int> right_part;
  std::unordered_map<std::uint32_t, int> left_part;
  std::vector<Element> xs;
  std::vector<Element> ys;
  for (const Element e : elems) {
    const auto [w, u] = coset_parts(*group_, e, e);
    right_part[e.id()] = w;
    left_part[e.id()] = u;
    if (w >= 1) xs.push_back(e);
    if (u >= 1) ys.push_back(e);
  }
  auto keep = [&](Element x, Element y) {
    return coset_hypothesis(right_part.at(x.id()), left_part.at(y.id()));
  };
  auto id = [](Element e) { return e; };
  const int bound = params().m_sr();
  auto scan = scan_pairs(xs, ys, id, id, keep, bound);
  report.bound = bound;
  absorb(report, scan, false);
  finish(report);
  return report;
}

bool Verifier::replay_coset_product(const WordTuple& witness) const {
  if (witness.size() != 3) return false;
  const Element x = group_->element(witness[0]);
  const Element y = group_->element(witness[1]);
  const auto [w, u] = coset_parts(*group_, x, y);
  return coset_hypothesis(w, u) && replay_degree_bound(params().m_sr(), witness);
}

CheckReport Verifier::check_parabolic() const {
  const Element top = longest(Generator::s, Generator::r);
  CheckReport report = make_report(top.length());
  const auto elems = dihedral(Generator::s, Generator::r);
  Capped found;
  int max_deg = 0;
  for (const Element w : elems) {
    for (const Element u : elems) {
      ++report.items_scanned;
      const HeckeVector prod = product(w, u);
      for (const auto& [v, f] : prod.terms()) {
        max_deg = std::max(max_deg, f.degree());
        if (!in_parabolic(v, kSR) || f.degree() > v.length()) found.add(words_of({w, u, v}), options_.witness_cap);
      }
    }
  }
  const int attained = f_coeff(top, top, top).degree();
  if (attained != top.length()) found.add(words_of({top, top, top}), options_.witness_cap);
  report.counters["degree_at_longest"] = attained;
  report.bound = top.length();
  report.max_degree_seen = max_deg;
  report.extremal = {words_of({top, top, top})};
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

bool Verifier::replay_parabolic(const WordTuple& witness) const {
  if (witness.size() != 3) return false;
  const Element w = group_->element(witness[0]);
  const Element u = group_->element(witness[1]);
  const Element v = group_->element(witness[2]);
  if (!in_parabolic(w, kSR) || !in_parabolic(u, kSR)) return false;
  const XiPoly f = f_coeff(w, u, v);
  const Element top = longest(Generator::s, Generator::r);
  if (w == top && u == top && v == top && f.degree() != top.length()) return true;
  if (f.is_zero()) return false;
  return !in_parabolic(v, kSR) || f.degree() > v.length();
}

// ---------------------------------------------------------------------------
// Invariants of the structure constants

CheckReport Verifier::check_f_positivity(int length_cap) const {
  CheckReport report = make_report(length_cap);
  const auto elems = group_->enumerate_up_to(length_cap);
  group_->ensure_length(2 * length_cap);
  const std::size_t cap = options_.witness_cap;
  auto rows = parallel_map(elems.size(), options_.jobs, [&](std::size_t i) {
    Capped row;
    const Element w = elems[i];
    for (const Element u : elems) {
      const HeckeVector prod = product(w, u);
      for (const auto& [v, f] : prod.terms()) {
        const int limit = std::min({w.length(), u.length(), v.length()});
        if (!f.has_nonnegative_coefficients() || f.degree() > limit) row.add(words_of({w, u, v}), cap);
      }
    }
    return row;
  });
  Capped found;
  for (auto& row : rows) found.merge(std::move(row), cap);
  report.items_scanned = static_cast<std::uint64_t>(elems.size()) * elems.size();
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

CheckReport Verifier::check_cyclic_symmetry(int length_cap) const {
  CheckReport report = make_report(length_cap);
  const auto elems = group_->enumerate_up_to(length_cap);
  group_->ensure_length(4 * length_cap);
  const std::size_t cap = options_.witness_cap;
  struct Row {
    Capped found;
    std::int64_t triples = 0;
  };
  auto rows = parallel_map(elems.size(), options_.jobs, [&](std::size_t i) {
    Row row;
    const Element w = elems[i];
    const Element w_inv = group_->inverse(w);
    for (const Element u : elems) {
      const Element u_inv = group_->inverse(u);
      const HeckeVector prod = product(w, u);
      for (const auto& [v, f] : prod.terms()) {
        ++row.triples;
        const Element v_inv = group_->inverse(v);
        if (f != f_coeff(u, v_inv, w_inv) || f != f_coeff(v_inv, w, u_inv)) {
          row.found.add(words_of({w, u, v}), cap);
        }
      }
    }
    return row;
  });
  Capped found;
  std::int64_t triples = 0;
  for (auto& row : rows) {
    triples += row.triples;
    found.merge(std::move(row.found), cap);
  }
  report.items_scanned = static_cast<std::uint64_t>(elems.size()) * elems.size();
  report.counters["triples_checked"] = triples;
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

CheckReport Verifier::check_inverse_symmetry(int length_cap) const {
  CheckReport report = make_report(length_cap);
  const auto elems = group_->enumerate_up_to(length_cap);
  group_->ensure_length(2 * length_cap);
  const std::size_t cap = options_.witness_cap;
  auto rows = parallel_map(elems.size(), options_.jobs, [&](std::size_t i) {
    Capped row;
    const Element w = elems[i];
    for (const Element u : elems) {
      const HeckeVector direct = product(w, u);
      std::vector<HeckeVector::Term> mapped;
      for (const auto& [v, f] : direct.terms()) mapped.emplace_back(group_->inverse(v), f);
      const HeckeVector expected = HeckeVector::from_terms(std::move(mapped));
      const HeckeVector swapped = product(group_->inverse(u), group_->inverse(w));
      if (swapped == expected) continue;
      // Report the first v at which f_{w,u,v} and f_{u^-1,w^-1,v^-1} differ.
      const HeckeVector diff = swapped - expected;
      for (const auto& [v_inv, f] : diff.terms()) {
        row.add(words_of({w, u, group_->inverse(v_inv)}), cap);
        static_cast<void>(f);
        break;
      }
    }
    return row;
  });
  Capped found;
  for (auto& row : rows) found.merge(std::move(row), cap);
  report.items_scanned = static_cast<std::uint64_t>(elems.size()) * elems.size();
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

CheckReport Verifier::check_associativity(int length_cap) const {
  CheckReport report = make_report(length_cap);
  const auto elems = group_->enumerate_up_to(length_cap);
  group_->ensure_length(3 * length_cap);
  std::mt19937_64 rng(options_.seed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::vector<std::array<Element, 3>> triples(options_.random_triples);
  for (auto& t : triples) t = {elems[pick(rng)], elems[pick(rng)], elems[pick(rng)]};

  const std::size_t cap = options_.witness_cap;
  auto results = parallel_map(triples.size(), options_.jobs, [&](std::size_t i) {
    const auto [w, u, x] = triples[i];
    const HeckeVector lhs = mul_element_right(product(w, u), x);
    const HeckeVector rhs = product(HeckeVector::basis(w), product(u, x));
    return lhs == rhs;
  });
  Capped found;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!results[i]) found.add(words_of({triples[i][0], triples[i][1], triples[i][2]}), cap);
  }
  report.items_scanned = triples.size();
  report.counters["seed"] = static_cast<std::int64_t>(options_.seed);
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

CheckReport Verifier::check_length_additive(int length_cap) const {
  CheckReport report = make_report(length_cap);
  const auto elems = group_->enumerate_up_to(length_cap);
  group_->ensure_length(2 * length_cap);
  const std::size_t cap = options_.witness_cap;
  struct Row {
    Capped found;
    std::int64_t additive = 0;
  };
  auto rows = parallel_map(elems.size(), options_.jobs, [&](std::size_t i) {
    Row row;
    const Element w = elems[i];
    for (const Element u : elems) {
      const Element wu = group_->multiply(w, u);
      if (wu.length() != w.length() + u.length()) continue;
      ++row.additive;
      if (product(w, u) != HeckeVector::basis(wu)) row.found.add(words_of({w, u}), cap);
    }
    return row;
  });
  Capped found;
  std::int64_t additive = 0;
  for (auto& row : rows) {
    additive += row.additive;
    found.merge(std::move(row.found), cap);
  }
  report.items_scanned = static_cast<std::uint64_t>(elems.size()) * elems.size();
  report.counters["length_additive_pairs"] = additive;
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

// ---------------------------------------------------------------------------
// Kazhdan-Lusztig data

CheckReport Verifier::check_kl_window(int length_cap) {
  CheckReport report = make_report(length_cap);
  Capped found;
  const std::size_t cap = options_.witness_cap;
  int max_deg_p = 0;
  std::int64_t nonzero_mu = 0;
  std::int64_t pairs = 0;
  for (const Element w : group_->enumerate_up_to(length_cap)) {
    ++report.items_scanned;
    const auto col = kl_.column(w);
    const auto interval = group_->lower_interval(w);
    std::vector<Element> support;
    for (const auto& term : col->terms()) support.push_back(term.first);
    if (support != interval) found.add(words_of({w}), cap);
    if (col->coefficient(w) != QPoly(1)) found.add(words_of({w, w}), cap);
    for (const auto& [y, p] : col->terms()) {
      if (y == w) continue;
      ++pairs;
      max_deg_p = std::max(max_deg_p, p.degree());
      if (2 * p.degree() > w.length() - y.length() - 1) found.add(words_of({y, w}), cap);
      const int gap = w.length() - y.length();
      if (gap % 2 == 1 && !p.coefficient((gap - 1) / 2).is_zero()) ++nonzero_mu;
    }
    const auto c = kl_.c_basis_tilde(w);
    if (c->coefficient(w) != HalfLaurent(1)) found.add(words_of({w, w}), cap);
    for (const auto& [y, coeff] : c->terms()) {
      if (y == w) continue;
      if (coeff.degree() >= 0 || !group_->bruhat_leq(y, w)) found.add(words_of({y, w}), cap);
    }
  }
  const HalfLaurent expected = HalfLaurent::monomial(1) + HalfLaurent::monomial(-1);
  for (const Generator g : kGenerators) {
    const Element e = group_->generator(g);
    if (kl_.h_coeffs(e, e) != HalfHeckeVector::basis(e, expected)) found.add(words_of({e, e, e}), cap);
  }
  report.max_degree_seen = max_deg_p;
  report.counters["comparable_pairs"] = pairs;
  report.counters["nonzero_mu"] = nonzero_mu;
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

CheckReport Verifier::check_a_window(int length_cap, std::optional<int> bound) {
  CheckReport report = make_report(length_cap);
  const AWindow window = compute_a_window(kl_, length_cap, options_.jobs);
  const int f_max = check_degree_bound(length_cap, std::nullopt).max_degree_seen.value_or(0);
  const int a_max = window.max_value();
  const std::size_t cap = options_.witness_cap;

  Capped found;
  Capped extremal;
  for (const auto& [v, a] : window.values) {
    ++report.histogram[a];
    if (a == a_max) extremal.add(words_of({v}), cap);
    if ((bound && a > *bound) || a > f_max) found.add(words_of({v}), cap);
  }
  report.items_scanned = window.pairs;
  report.bound = bound;
  report.max_degree_seen = a_max;
  report.extremal = std::move(extremal.items);
  report.counters["elements_with_nonzero_h"] = static_cast<std::int64_t>(window.values.size());
  report.counters["nonzero_h"] = static_cast<std::int64_t>(window.nonzero_h);
  report.counters["h_not_bar_invariant"] = static_cast<std::int64_t>(window.asymmetric_h);
  report.counters["max_f_degree_window"] = f_max;
  report.notes.push_back("values are lower bounds for the a-function");
  report.witnesses = std::move(found.items);
  report.witness_count = found.count;
  finish(report);
  return report;
}

}  // namespace heckebound
