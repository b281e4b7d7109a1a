#pragma once

// Elements of the Hecke algebra in the normalized basis T~_w = q^{-l(w)/2} T_w.
// Right multiplication by a generator:
//   T~_w T~_g = T~_{wg}                 if l(wg) > l(w)
//   T~_w T~_g = xi T~_w + T~_{wg}       otherwise,
// with xi = q^{1/2} - q^{-1/2}.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heckebound/coxeter.hpp"
#include "heckebound/laurent.hpp"

namespace heckebound {

inline XiPoly times_xi(XiPoly c) {
  c.shift_up();
  return c;
}
inline HalfLaurent times_xi(const HalfLaurent& c) { return c * HalfLaurent::xi(); }

/// Finite linear combination of basis elements, kept sorted by element
/// (ShortLex) with no zero coefficients.
template <typename Coeff>
class BasicHeckeVector {
 public:
  using Term = std::pair<Element, Coeff>;

  BasicHeckeVector() = default;

  static BasicHeckeVector basis(Element w, Coeff c = Coeff(1)) {
    BasicHeckeVector v;
    if (!c.is_zero()) v.terms_.emplace_back(w, std::move(c));
    return v;
  }

  /// Builds from unsorted terms, merging repeated elements.
  static BasicHeckeVector from_terms(std::vector<Term> terms) {
    BasicHeckeVector v;
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!v.terms_.empty() && v.terms_.back().first == t.first) {
        v.terms_.back().second += t.second;
        if (v.terms_.back().second.is_zero()) v.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        v.terms_.push_back(std::move(t));
      }
    }
    return v;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coeff coefficient(Element w) const {
    auto it = find(w);
    return it == terms_.end() ? Coeff() : it->second;
  }

  /// this += c * o
  BasicHeckeVector& add_scaled(const BasicHeckeVector& o, const Coeff& c) {
    if (c.is_zero() || o.is_zero()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        out.emplace_back(j->first, j->second * c);
        ++j;
      } else {
        Coeff sum = std::move(i->second);
        sum += j->second * c;
        if (!sum.is_zero()) out.emplace_back(i->first, std::move(sum));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  BasicHeckeVector& operator+=(const BasicHeckeVector& o) { return add_scaled(o, Coeff(1)); }
  BasicHeckeVector& operator-=(const BasicHeckeVector& o) { return add_scaled(o, Coeff(-1)); }
  friend BasicHeckeVector operator+(BasicHeckeVector a, const BasicHeckeVector& b) { return a += b; }
  friend BasicHeckeVector operator-(BasicHeckeVector a, const BasicHeckeVector& b) { return a -= b; }
  bool operator==(const BasicHeckeVector&) const = default;

 private:
  typename std::vector<Term>::const_iterator find(Element w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, Element e) { return t.first < e; });
    return (it != terms_.end() && it->first == w) ? it : terms_.end();
  }

  std::vector<Term> terms_;
};

using HeckeVector = BasicHeckeVector<XiPoly>;
using HalfHeckeVector = BasicHeckeVector<HalfLaurent>;

template <typename Coeff>
BasicHeckeVector<Coeff> mul_gen(const BasicHeckeVector<Coeff>& v, Generator g, Side side) {
  std::vector<typename BasicHeckeVector<Coeff>::Term> out;
  out.reserve(2 * v.size());
  for (const auto& [w, c] : v.terms()) {
    const Element wg = w.group().multiply_gen(w, g, side);
    if (wg.length() < w.length()) out.emplace_back(w, times_xi(c));
    out.emplace_back(wg, c);
  }
  return BasicHeckeVector<Coeff>::from_terms(std::move(out));
}

template <typename Coeff>
BasicHeckeVector<Coeff> mul_gen_right(const BasicHeckeVector<Coeff>& v, Generator g) {
  return mul_gen(v, g, Side::right);
}

template <typename Coeff>
BasicHeckeVector<Coeff> mul_gen_left(Generator g, const BasicHeckeVector<Coeff>& v) {
  return mul_gen(v, g, Side::left);
}

/// v * T~_u, applying generators along the normal form of u.
template <typename Coeff>
BasicHeckeVector<Coeff> mul_element_right(BasicHeckeVector<Coeff> v, Element u) {
  for (Generator g : u.normal_form()) v = mul_gen_right(v, g);
  return v;
}

/// T~_w T~_u = sum_v f_{w,u,v} T~_v.
HeckeVector product(Element w, Element u);
/// General product of two vectors.
HeckeVector product(const HeckeVector& a, const HeckeVector& b);
XiPoly f_coeff(Element w, Element u, Element v);
/// Largest xi-degree among the coefficients; 0 for the zero vector.
int max_degree(const HeckeVector& v);
int max_f_degree(Element w, Element u);

/// Products T~_w T~_u for a fixed w, memoized over prefixes of the normal
/// form of u so that a scan over many u shares work. Not thread-safe; use
/// one instance per worker.
class ProductRow {
 public:
  explicit ProductRow(Element w);

  Element left() const noexcept { return w_; }
  const HeckeVector& times(Element u);
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  Element w_;
  std::unordered_map<std::uint32_t, HeckeVector> memo_;
};

}  // namespace heckebound
