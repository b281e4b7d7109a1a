#pragma once

// Exhaustive window checks of the structural statements about rank-3 groups
// with m_tr = 2: suffix exclusions, sandwich length additivity, degree
// bounds for products in the T~ basis, and supporting algebraic invariants.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heckebound/coxeter.hpp"
#include "heckebound/hecke.hpp"
#include "heckebound/kl.hpp"
#include "heckebound/word_problem.hpp"

namespace heckebound {

enum class CheckStatus { pass, fail, advisory };
std::string to_string(CheckStatus status);

class HypothesisMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using WordTuple = std::vector<Word>;

struct CheckReport {
  std::string id;
  std::string family;
  std::string statement;
  int m_sr = 0;
  int m_st = 0;
  int length_cap = 0;
  CheckStatus status = CheckStatus::pass;
  bool hypothesis_met = true;
  /// Degree bound asserted by the check, if it is a degree check.
  std::optional<int> bound;
  /// Largest degree observed, if the check computes degrees.
  std::optional<int> max_degree_seen;
  std::uint64_t items_scanned = 0;
  /// Violations (first witness_cap of them) and their total number.
  std::vector<WordTuple> witnesses;
  std::uint64_t witness_count = 0;
  /// Inputs attaining max_degree_seen (first witness_cap of them).
  std::vector<WordTuple> extremal;
  /// Per-pair maximal degree -> number of pairs.
  std::map<int, std::uint64_t> histogram;
  /// (l(x), l(y)) -> maximal degree over pairs of those lengths.
  std::map<std::pair<int, int>, int> strata;
  std::map<std::string, std::int64_t> counters;
  std::vector<std::string> notes;
  double seconds = 0.0;
};

/// Both A and B are suffixes: w = (w1)(A) = (w2)(B).
struct SuffixPattern {
  Word a;
  Word b;
};

/// Condition on a descent set.
struct DescentCondition {
  enum class Rule { any, excludes, equals };
  Rule rule = Rule::any;
  GeneratorSet set;

  static DescentCondition any() { return {}; }
  static DescentCondition excludes(GeneratorSet s) { return {Rule::excludes, s}; }
  static DescentCondition equals(GeneratorSet s) { return {Rule::equals, s}; }

  bool holds(GeneratorSet descents) const noexcept;
  /// E.g. "s,t not in R(x)" or "L(y) = {t}".
  std::string describe(const std::string& set_name) const;
};

/// Degree bound for T~_{x a} T~_{b y} with conditions on R(x) and L(y).
struct LadderPattern {
  DescentCondition on_x;
  DescentCondition on_y;
  Element x_suffix;
  Element y_prefix;
  int bound = 0;
};

struct VerifierOptions {
  unsigned jobs = 1;
  /// Share partial products along prefixes of the right factor.
  bool memo = false;
  std::size_t witness_cap = 100;
  std::uint64_t seed = 0x5eed;
  std::size_t random_triples = 1000;
  WordProblemOptions word_problem;
};

class Verifier {
 public:
  explicit Verifier(const CoxeterGroup& group, VerifierOptions options = {});

  const CoxeterGroup& group() const noexcept { return *group_; }
  const GroupParams& params() const noexcept { return group_->params(); }
  const VerifierOptions& options() const noexcept { return options_; }
  KLTable& kl() noexcept { return kl_; }
  WordProblem& word_problem() noexcept { return word_problem_; }

  // Statements about single elements.
  CheckReport check_no_double_suffix(const SuffixPattern& pattern, int length_cap) const;
  CheckReport check_descent_finiteness(int length_cap) const;
  CheckReport check_longest_parabolic_factor(int length_cap) const;
  CheckReport check_tits_consistency(int length_cap);

  CheckReport check_sandwich(ParabolicLabel label, int min_w_length, int length_cap) const;

  // Degree statements over pairs.
  CheckReport check_degree_pattern(const LadderPattern& pattern, int length_cap) const;
  CheckReport check_parabolic() const;
  CheckReport check_coset_product(int length_cap) const;
  /// All pairs with l(x), l(y) <= length_cap against `bound` (none: record only).
  CheckReport check_degree_bound(int length_cap, std::optional<int> bound) const;
  CheckReport scan_degrees(int length_cap) const;

  // Algebraic invariants of the structure constants.
  CheckReport check_f_positivity(int length_cap) const;
  CheckReport check_cyclic_symmetry(int length_cap) const;
  CheckReport check_inverse_symmetry(int length_cap) const;
  CheckReport check_associativity(int length_cap) const;
  CheckReport check_length_additive(int length_cap) const;

  CheckReport check_kl_window(int length_cap);
  CheckReport check_a_window(int length_cap, std::optional<int> bound);

  /// Longest element of W_{g,h}.
  Element longest(Generator g, Generator h) const;
  /// The elements of W_{g,h}, ShortLex.
  std::vector<Element> dihedral(Generator g, Generator h) const;

  // Replays a single witness, returning true when the violation it records
  // is reproduced.
  bool replay_suffix(const SuffixPattern& pattern, const WordTuple& witness) const;
  bool replay_sandwich(ParabolicLabel label, int min_w_length, const WordTuple& witness) const;
  bool replay_degree_pattern(const LadderPattern& pattern, const WordTuple& witness) const;
  bool replay_degree_bound(int bound, const WordTuple& witness) const;
  bool replay_coset_product(const WordTuple& witness) const;
  bool replay_parabolic(const WordTuple& witness) const;

 private:
  struct PairScan;
  PairScan scan_pairs(const std::vector<Element>& xs, const std::vector<Element>& ys,
                      const std::function<Element(Element)>& left,
                      const std::function<Element(Element)>& right,
                      const std::function<bool(Element, Element)>& keep,
                      std::optional<int> bound) const;
  void finish(CheckReport& report) const;
  CheckReport make_report(int length_cap) const;

  const CoxeterGroup* group_;
  VerifierOptions options_;
  KLTable kl_;
  WordProblem word_problem_;
};

}  // namespace heckebound
