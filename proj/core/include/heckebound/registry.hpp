#pragma once

// The table of named checks. Listings, reports and the command line all read
// from this one table.

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "heckebound/verifier.hpp"

namespace heckebound {

/// Which window length a check is scanned at.
enum class LengthKind { pair, single, aux, none };

struct RunLengths {
  int pair = 8;
  int single = 10;
  int aux = 6;
};

struct CheckSpec {
  std::string id;
  std::string family;
  std::string statement;
  std::string hypothesis;
  std::function<bool(const GroupParams&)> applies;
  /// Non-asserting checks only record statistics and never fail a run.
  bool asserting = true;
  LengthKind length = LengthKind::pair;
  std::function<CheckReport(Verifier&, int)> run;
  /// Re-evaluates one witness; true when the recorded violation reproduces.
  std::function<bool(Verifier&, const WordTuple&, int)> replay;
};

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All checks in declaration order.
const std::vector<CheckSpec>& check_registry();
const CheckSpec* find_check(std::string_view id);

/// Resolves ids, id stems such as "lemma-4.7" (all of its variants), family
/// names, the alias "theorem" and "all", keeping the
/// order given and dropping repeats. Throws UnknownCheck.
std::vector<const CheckSpec*> select_checks(const std::vector<std::string>& selectors);

/// All checks ordered by id, comparing digit runs numerically.
std::vector<const CheckSpec*> sorted_checks();
bool natural_less(std::string_view a, std::string_view b);

int length_for(const CheckSpec& spec, const RunLengths& lengths);

/// Runs one check. When the parameters fall outside the check's hypothesis
/// the scan still runs and is marked advisory, unless `strict` is set, in
/// which case HypothesisMismatch is thrown.
CheckReport run_check(const CheckSpec& spec, Verifier& verifier, const RunLengths& lengths,
                      bool strict = false);

}  // namespace heckebound
