#pragma once

// Kazhdan-Lusztig polynomials, the C basis
//   C_w = q^{-l(w)/2} sum_{y<=w} P_{y,w} T_y,
// structure constants C_w C_u = sum_v h_{w,u,v} C_v, and a windowed lower
// bound for Lusztig's a-function.

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "heckebound/coxeter.hpp"
#include "heckebound/hecke.hpp"
#include "heckebound/laurent.hpp"

namespace heckebound {

class NotComparable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// P_{x,w} for all x <= w, indexed by x.
using KLColumn = BasicHeckeVector<QPoly>;

/// Memoized KL polynomials, computed column by column with the right-descent
/// recursion: for w = vs > v,
///   P_{x,w} = q^{1-c} P_{xs,v} + q^c P_{x,v}
///             - sum_{z < v, zs < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z},
/// where c = 1 if xs < x and c = 0 otherwise. Safe for concurrent use.
class KLTable {
 public:
  explicit KLTable(const CoxeterGroup& group);

  const CoxeterGroup& group() const noexcept { return *group_; }

  /// Zero unless y <= w.
  QPoly kl_poly(Element y, Element w) const;
  /// Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w}; throws NotComparable
  /// unless y < w.
  Integer mu(Element y, Element w) const;
  std::shared_ptr<const KLColumn> column(Element w) const;

  /// C_w in the T basis (coefficient of T_y is q^{-l(w)/2} P_{y,w}).
  HalfHeckeVector c_basis(Element w) const;
  /// C_w in the T~ basis (coefficient of T~_y is q^{(l(y)-l(w))/2} P_{y,w}).
  std::shared_ptr<const HalfHeckeVector> c_basis_tilde(Element w) const;

  /// Rewrites a T~-basis vector in the C basis. Coefficients are returned as
  /// a vector indexed by the C basis elements.
  HalfHeckeVector to_c_basis(HalfHeckeVector v) const;

  /// h_{w,u,v} for all v, keyed by v.
  HalfHeckeVector h_coeffs(Element w, Element u) const;

  std::size_t cached_columns() const;

 private:
  std::shared_ptr<const KLColumn> compute_column(Element w) const;

  const CoxeterGroup* group_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::uint32_t, std::shared_ptr<const KLColumn>> columns_;
  mutable std::unordered_map<std::uint32_t, std::shared_ptr<const HalfHeckeVector>> c_tilde_;
};

/// C_w C_u for a fixed w and many u, sharing the partial products C_w T~_z
/// over prefixes z. Not thread-safe; one instance per worker.
class CProductRow {
 public:
  CProductRow(const KLTable& table, Element w);

  /// h_{w,u,v} for all v.
  HalfHeckeVector h_coeffs(Element u);

 private:
  const HalfHeckeVector& times_tilde(Element z);

  const KLTable* table_;
  std::unordered_map<std::uint32_t, HalfHeckeVector> memo_;
};

/// Degrees deg_{q^{1/2}} h_{w,u,v} maximized over l(w), l(u) <= length_cap.
/// Every value is a lower bound for a(v).
struct AWindow {
  int length_cap = 0;
  std::map<Element, int> values;
  std::uint64_t pairs = 0;
  /// Number of (w,u,v) with h_{w,u,v} not invariant under q^{1/2} -> q^{-1/2}.
  std::uint64_t asymmetric_h = 0;
  /// Number of (w,u,v) with h_{w,u,v} != 0.
  std::uint64_t nonzero_h = 0;

  /// a_N(v); zero when no h_{w,u,v} in the window is nonzero.
  int value(Element v) const;
  int max_value() const;
};

AWindow compute_a_window(const KLTable& table, int length_cap, unsigned jobs = 1);
int a_windowed(const KLTable& table, Element v, int length_cap, unsigned jobs = 1);

}  // namespace heckebound
