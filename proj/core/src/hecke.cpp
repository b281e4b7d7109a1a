#include "heckebound/hecke.hpp"

namespace heckebound {

HeckeVector product(Element w, Element u) {
  return mul_element_right(HeckeVector::basis(w), u);
}

HeckeVector product(const HeckeVector& a, const HeckeVector& b) {
  HeckeVector out;
  for (const auto& [u, c] : b.terms()) out.add_scaled(mul_element_right(a, u), c);
  return out;
}

XiPoly f_coeff(Element w, Element u, Element v) { return product(w, u).coefficient(v); }

int max_degree(const HeckeVector& v) {
  int best = 0;
  for (const auto& term : v.terms()) best = std::max(best, term.second.degree());
  return best;
}

int max_f_degree(Element w, Element u) { return max_degree(product(w, u)); }

ProductRow::ProductRow(Element w) : w_(w) { memo_.emplace(w.group().neutral().id(), HeckeVector::basis(w)); }

const HeckeVector& ProductRow::times(Element u) {
  if (auto it = memo_.find(u.id()); it != memo_.end()) return it->second;
  // Dropping the last letter of a ShortLex normal form leaves the normal form
  // of the prefix, so prefixes chain through the memo.
  const Generator last = u.normal_form().back();
  const Element prefix = u.group().multiply_gen(u, last, Side::right);
  HeckeVector v = mul_gen_right(times(prefix), last);
  return memo_.emplace(u.id(), std::move(v)).first->second;
}

}  // namespace heckebound
