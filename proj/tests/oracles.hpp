#pragma once

// Reference implementations used only by the tests. They work on plain
// strings and maps and share no algorithm with the library beyond element
// lookups where noted.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "heckebound/coxeter.hpp"
#include "heckebound/laurent.hpp"

namespace oracle {

using heckebound::Element;
using heckebound::Integer;

/// All words of length exactly n over {s,t,r}.
std::vector<std::string> all_words(int n);

/// Reduced expressions of the element represented by `word`: the shortest
/// words reachable by braid moves and deletions of "gg".
std::set<std::string> reduced_expressions(const std::string& word, int m_sr, int m_st);

/// Least word in ShortLex order with s < t < r.
std::string shortlex_min(const std::set<std::string>& words);

/// y <= w iff some subword of the given reduced word of w is a reduced
/// expression of y.
bool subword_leq(const std::set<std::string>& reduced_y, const std::string& reduced_w);

/// q-polynomial as exponent -> coefficient.
using QMap = std::map<int, Integer>;

/// T_x T_y in the unnormalized basis, T_w T_g = (q-1) T_w + q T_{wg} on a
/// descent. Element lookups go through the group table.
std::map<Element, QMap> t_basis_product(Element x, Element y);

/// f_{x,y,z} as q^{1/2}-exponent -> coefficient, from t_basis_product.
std::map<Element, std::map<int, Integer>> normalized_structure_constants(Element x, Element y);

/// Bar involution of an element given in the T~ basis, with coefficients as
/// q^{1/2}-exponent -> coefficient.
using HalfMap = std::map<int, Integer>;
std::map<Element, HalfMap> bar(const std::map<Element, HalfMap>& v);

/// Dihedral group I_2(m) with generators a = 0, b = 1. Elements are
/// (first letter, length), the longest element normalized to first letter 0.
struct Dihedral {
  int m;

  struct Elem {
    int first = 0;
    int length = 0;
    auto operator<=>(const Elem&) const = default;
  };

  std::vector<Elem> elements() const;
  Elem times(Elem w, int g) const;
  int last_letter(Elem w) const;
  std::string word(Elem w, char a, char b) const;

  /// T~_x T~_y as element -> xi-coefficients (index = power of xi).
  std::map<Elem, std::vector<long long>> product(Elem x, Elem y) const;
};

}  // namespace oracle
