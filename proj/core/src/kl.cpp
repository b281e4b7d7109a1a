#include "heckebound/kl.hpp"

#include <mutex>
#include <vector>

#include "heckebound/parallel.hpp"

namespace heckebound {

namespace {

QPoly shift_q(const QPoly& p, int k) { return p * QPoly::monomial(k); }

}  // namespace

KLTable::KLTable(const CoxeterGroup& group) : group_(&group) {}

std::size_t KLTable::cached_columns() const {
  std::shared_lock lock(mutex_);
  return columns_.size();
}

std::shared_ptr<const KLColumn> KLTable::column(Element w) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = columns_.find(w.id()); it != columns_.end()) return it->second;
  }
  auto col = compute_column(w);
  std::unique_lock lock(mutex_);
  return columns_.emplace(w.id(), std::move(col)).first->second;
}

std::shared_ptr<const KLColumn> KLTable::compute_column(Element w) const {
  const CoxeterGroup& g = *group_;
  if (w.is_identity()) return std::make_shared<const KLColumn>(KLColumn::basis(w, QPoly(1)));

  const Generator s = w.right_descents().first();
  const Element v = g.multiply_gen(w, s, Side::right);
  const auto col_v = column(v);

  struct MuTerm {
    Integer mu;
    int shift;
    std::shared_ptr<const KLColumn> col;
  };
  std::vector<MuTerm> mu_terms;
  for (const auto& [z, p] : col_v->terms()) {
    if (z == v || !z.right_descents().contains(s)) continue;
    const int gap = v.length() - z.length();
    if (gap % 2 == 0) continue;
    const Integer m = p.coefficient((gap - 1) / 2);
    if (m.is_zero()) continue;
    mu_terms.push_back({m, (w.length() - z.length()) / 2, column(z)});
  }

  std::vector<KLColumn::Term> entries;
  for (const Element x : g.lower_interval(w)) {
    const Element xs = g.multiply_gen(x, s, Side::right);
    const int c = xs.length() < x.length() ? 1 : 0;
    QPoly p = shift_q(col_v->coefficient(xs), 1 - c) + shift_q(col_v->coefficient(x), c);
    for (const MuTerm& t : mu_terms) {
      const QPoly pxz = t.col->coefficient(x);
      if (!pxz.is_zero()) p -= shift_q(pxz, t.shift) * QPoly::monomial(0, t.mu);
    }
    entries.emplace_back(x, std::move(p));
  }
  return std::make_shared<const KLColumn>(KLColumn::from_terms(std::move(entries)));
}

QPoly KLTable::kl_poly(Element y, Element w) const {
  if (y.length() > w.length()) return QPoly();
  return column(w)->coefficient(y);
}

Integer KLTable::mu(Element y, Element w) const {
  if (y == w || !group_->bruhat_leq(y, w)) {
    throw NotComparable("mu(" + y.to_string() + ", " + w.to_string() + ") needs y < w");
  }
  const int gap = w.length() - y.length();
  if (gap % 2 == 0) return 0;
  return kl_poly(y, w).coefficient((gap - 1) / 2);
}

HalfHeckeVector KLTable::c_basis(Element w) const {
  std::vector<HalfHeckeVector::Term> terms;
  const auto col = column(w);
  for (const auto& [y, p] : col->terms()) terms.emplace_back(y, to_half(p).shifted(-w.length()));
  return HalfHeckeVector::from_terms(std::move(terms));
}

std::shared_ptr<const HalfHeckeVector> KLTable::c_basis_tilde(Element w) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = c_tilde_.find(w.id()); it != c_tilde_.end()) return it->second;
  }
  std::vector<HalfHeckeVector::Term> terms;
  const auto col = column(w);
  for (const auto& [y, p] : col->terms()) {
    terms.emplace_back(y, to_half(p).shifted(y.length() - w.length()));
  }
  auto vec = std::make_shared<const HalfHeckeVector>(HalfHeckeVector::from_terms(std::move(terms)));
  std::unique_lock lock(mutex_);
  return c_tilde_.emplace(w.id(), std::move(vec)).first->second;
}

HalfHeckeVector KLTable::to_c_basis(HalfHeckeVector v) const {
  // C~_y = T~_y + terms of smaller length, and the largest id in the support
  // has maximal length, so peeling from the back is triangular elimination.
  std::vector<HalfHeckeVector::Term> out;
  while (!v.is_zero()) {
    const auto [y, c] = v.terms().back();
    v.add_scaled(*c_basis_tilde(y), -c);
    out.emplace_back(y, c);
  }
  return HalfHeckeVector::from_terms(std::move(out));
}

HalfHeckeVector KLTable::h_coeffs(Element w, Element u) const {
  CProductRow row(*this, w);
  return row.h_coeffs(u);
}

// ---------------------------------------------------------------------------

CProductRow::CProductRow(const KLTable& table, Element w) : table_(&table) {
  memo_.emplace(table.group().neutral().id(), *table.c_basis_tilde(w));
}

const HalfHeckeVector& CProductRow::times_tilde(Element z) {
  if (auto it = memo_.find(z.id()); it != memo_.end()) return it->second;
  const Generator last = z.normal_form().back();
  const Element prefix = z.group().multiply_gen(z, last, Side::right);
  HalfHeckeVector v = mul_gen_right(times_tilde(prefix), last);
  return memo_.emplace(z.id(), std::move(v)).first->second;
}

HalfHeckeVector CProductRow::h_coeffs(Element u) {
  HalfHeckeVector prod;
  const auto c_u = table_->c_basis_tilde(u);
  for (const auto& [z, b] : c_u->terms()) prod.add_scaled(times_tilde(z), b);
  return table_->to_c_basis(std::move(prod));
}

// ---------------------------------------------------------------------------

int AWindow::value(Element v) const {
  auto it = values.find(v);
  return it == values.end() ? 0 : it->second;
}

int AWindow::max_value() const {
  int best = 0;
  for (const auto& [v, a] : values) best = std::max(best, a);
  return best;
}

AWindow compute_a_window(const KLTable& table, int length_cap, unsigned jobs) {
  const CoxeterGroup& g = table.group();
  g.ensure_length(2 * length_cap);
  const std::vector<Element> elems = g.enumerate_up_to(length_cap);

  struct Partial {
    std::map<Element, int> values;
    std::uint64_t asymmetric = 0;
    std::uint64_t nonzero = 0;
  };
  auto partials = parallel_map(elems.size(), jobs, [&](std::size_t i) {
    Partial part;
    CProductRow row(table, elems[i]);
    for (const Element u : elems) {
      const HalfHeckeVector h_row = row.h_coeffs(u);
      for (const auto& [v, h] : h_row.terms()) {
        ++part.nonzero;
        if (h.bar() != h) ++part.asymmetric;
        auto [it, fresh] = part.values.emplace(v, std::max(0, h.degree()));
        if (!fresh) it->second = std::max(it->second, h.degree());
      }
    }
    return part;
  });

  AWindow window;
  window.length_cap = length_cap;
  window.pairs = static_cast<std::uint64_t>(elems.size()) * elems.size();
  for (const Partial& part : partials) {
    window.asymmetric_h += part.asymmetric;
    window.nonzero_h += part.nonzero;
    for (const auto& [v, a] : part.values) {
      auto [it, fresh] = window.values.emplace(v, a);
      if (!fresh) it->second = std::max(it->second, a);
    }
  }
  return window;
}

int a_windowed(const KLTable& table, Element v, int length_cap, unsigned jobs) {
  return compute_a_window(table, length_cap, jobs).value(v);
}

}  // namespace heckebound
