#include "heckebound/laurent.hpp"

#include <algorithm>
#include <map>

namespace heckebound {

namespace {

template <typename F>
void dense_combine(std::vector<Integer>& a, const std::vector<Integer>& b, F op) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) op(a[i], b[i]);
}

std::vector<Integer> dense_multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void trim_dense(std::vector<Integer>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Appends " + c*<mono>" / " - |c|*<mono>" style terms.
void append_term(std::string& out, const Integer& c, const std::string& mono) {
  if (out.empty()) {
    out = c.str();
  } else if (c < 0) {
    out += " - ";
    out += Integer(-c).str();
  } else {
    out += " + ";
    out += c.str();
  }
  if (!mono.empty()) {
    out += '*';
    out += mono;
  }
}

std::string dense_to_string(const std::vector<Integer>& c, char var) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    std::string mono;
    if (k == 1) mono = std::string(1, var);
    if (k > 1) mono = std::string(1, var) + "^" + std::to_string(k);
    append_term(out, c[k], mono);
  }
  return out.empty() ? "0" : out;
}

using Terms = std::vector<std::pair<int, Integer>>;

template <bool Subtract>
Terms merge_terms(const Terms& a, const Terms& b) {
  Terms out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, Subtract ? Integer(-j->second) : j->second);
      ++j;
    } else {
      Integer c = Subtract ? Integer(i->second - j->second) : Integer(i->second + j->second);
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// XiPoly

XiPoly::XiPoly(long long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

XiPoly::XiPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

XiPoly XiPoly::monomial(int k, const Integer& c) {
  if (k < 0) throw std::invalid_argument("negative xi exponent");
  XiPoly p;
  if (!c.is_zero()) {
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Integer(0));
    p.coeffs_.back() = c;
  }
  return p;
}

Integer XiPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool XiPoly::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

void XiPoly::shift_up() {
  if (!coeffs_.empty()) coeffs_.insert(coeffs_.begin(), Integer(0));
}

void XiPoly::trim() { trim_dense(coeffs_); }

XiPoly& XiPoly::operator+=(const XiPoly& o) {
  dense_combine(coeffs_, o.coeffs_, [](Integer& x, const Integer& y) { x += y; });
  trim();
  return *this;
}

XiPoly& XiPoly::operator-=(const XiPoly& o) {
  dense_combine(coeffs_, o.coeffs_, [](Integer& x, const Integer& y) { x -= y; });
  trim();
  return *this;
}

XiPoly& XiPoly::operator*=(const XiPoly& o) {
  coeffs_ = dense_multiply(coeffs_, o.coeffs_);
  trim();
  return *this;
}

XiPoly XiPoly::operator-() const {
  XiPoly p = *this;
  for (Integer& c : p.coeffs_) c = -c;
  return p;
}

std::string XiPoly::to_string() const { return dense_to_string(coeffs_, 'x'); }

// ---------------------------------------------------------------------------
// HalfLaurent

HalfLaurent::HalfLaurent(long long c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

HalfLaurent HalfLaurent::monomial(int half_exponent, const Integer& c) {
  HalfLaurent p;
  if (!c.is_zero()) p.terms_.emplace_back(half_exponent, c);
  return p;
}

HalfLaurent HalfLaurent::xi() {
  HalfLaurent p;
  p.terms_ = {{-1, Integer(-1)}, {1, Integer(1)}};
  return p;
}

Integer HalfLaurent::coefficient(int half_exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exponent,
                             [](const auto& t, int e) { return t.first < e; });
  if (it == terms_.end() || it->first != half_exponent) return 0;
  return it->second;
}

HalfLaurent HalfLaurent::bar() const {
  HalfLaurent p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

HalfLaurent HalfLaurent::shifted(int k) const {
  HalfLaurent p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

HalfLaurent HalfLaurent::negative_part() const {
  HalfLaurent p;
  for (const auto& t : terms_) {
    if (t.first >= 0) break;
    p.terms_.push_back(t);
  }
  return p;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<false>(terms_, o.terms_);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<true>(terms_, o.terms_);
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
  if (terms_.empty() || o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  const int lo = terms_.front().first + o.terms_.front().first;
  const int hi = terms_.back().first + o.terms_.back().first;
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo) + 1);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  }
  terms_.clear();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
  }
  return *this;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

std::string HalfLaurent::to_string() const {
  std::string out;
  for (const auto& [e, c] : terms_) append_term(out, c, "q^(" + std::to_string(e) + "/2)");
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(long long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPoly QPoly::monomial(int k, const Integer& c) {
  if (k < 0) throw std::invalid_argument("negative q exponent");
  QPoly p;
  if (!c.is_zero()) {
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Integer(0));
    p.coeffs_.back() = c;
  }
  return p;
}

Integer QPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void QPoly::trim() { trim_dense(coeffs_); }

QPoly& QPoly::operator+=(const QPoly& o) {
  dense_combine(coeffs_, o.coeffs_, [](Integer& x, const Integer& y) { x += y; });
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  dense_combine(coeffs_, o.coeffs_, [](Integer& x, const Integer& y) { x -= y; });
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  coeffs_ = dense_multiply(coeffs_, o.coeffs_);
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (Integer& c : p.coeffs_) c = -c;
  return p;
}

std::string QPoly::to_string() const { return dense_to_string(coeffs_, 'q'); }

// ---------------------------------------------------------------------------
// Conversions

HalfLaurent xi_to_half(const XiPoly& p) {
  // Horner in xi.
  HalfLaurent out;
  const HalfLaurent xi = HalfLaurent::xi();
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    out *= xi;
    out += HalfLaurent::monomial(0, *it);
  }
  return out;
}

XiPoly half_to_xi(const HalfLaurent& p) {
  // xi^k has leading term q^{k/2} with coefficient 1, so peel off top terms.
  std::vector<Integer> coeffs;
  HalfLaurent rest = p;
  const HalfLaurent xi = HalfLaurent::xi();
  std::vector<HalfLaurent> powers{HalfLaurent(1)};
  while (!rest.is_zero()) {
    const int d = rest.degree();
    if (d < 0) throw NotInXiSpan("not a polynomial in xi: " + p.to_string());
    while (static_cast<int>(powers.size()) <= d) powers.push_back(powers.back() * xi);
    const Integer c = rest.coefficient(d);
    if (coeffs.size() <= static_cast<std::size_t>(d)) coeffs.resize(static_cast<std::size_t>(d) + 1);
    coeffs[static_cast<std::size_t>(d)] = c;
    rest -= powers[static_cast<std::size_t>(d)] * HalfLaurent::monomial(0, c);
  }
  return XiPoly(std::move(coeffs));
}

HalfLaurent to_half(const QPoly& p) {
  HalfLaurent out;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) out += HalfLaurent::monomial(2 * static_cast<int>(k), c[k]);
  return out;
}

}  // namespace heckebound
