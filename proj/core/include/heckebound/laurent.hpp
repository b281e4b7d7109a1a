#pragma once

// Exact coefficient rings:
//   HalfLaurent  Z[q^{1/2}, q^{-1/2}], exponents stored doubled;
//   XiPoly       Z[xi] with xi = q^{1/2} - q^{-1/2};
//   QPoly        Z[q].
// Coefficients are arbitrary precision.

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace heckebound {

using Integer = boost::multiprecision::cpp_int;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class NotInXiSpan : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class XiPoly {
 public:
  XiPoly() = default;
  XiPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit XiPoly(std::vector<Integer> coefficients);

  static XiPoly xi() { return monomial(1); }
  static XiPoly monomial(int k, const Integer& c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  Integer coefficient(int k) const;
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  bool has_nonnegative_coefficients() const;

  /// Multiplies in place by xi.
  void shift_up();

  XiPoly& operator+=(const XiPoly& o);
  XiPoly& operator-=(const XiPoly& o);
  XiPoly& operator*=(const XiPoly& o);
  friend XiPoly operator+(XiPoly a, const XiPoly& b) { return a += b; }
  friend XiPoly operator-(XiPoly a, const XiPoly& b) { return a -= b; }
  friend XiPoly operator*(XiPoly a, const XiPoly& b) { return a *= b; }
  XiPoly operator-() const;
  bool operator==(const XiPoly&) const = default;

  /// "c0 + c1*x + c2*x^2" over the nonzero terms; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

class HalfLaurent {
 public:
  HalfLaurent() = default;
  HalfLaurent(long long c);  // NOLINT(google-explicit-constructor)

  /// c * q^{half_exponent / 2}.
  static HalfLaurent monomial(int half_exponent, const Integer& c = 1);
  static HalfLaurent xi();

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest exponent in units of q^{1/2}.
  int degree() const noexcept { return terms_.empty() ? kZeroDegree : terms_.back().first; }
  /// Smallest exponent in units of q^{1/2}.
  int valuation() const noexcept {
    return terms_.empty() ? std::numeric_limits<int>::max() : terms_.front().first;
  }
  Integer coefficient(int half_exponent) const;
  const std::vector<std::pair<int, Integer>>& terms() const noexcept { return terms_; }

  /// The involution q^{1/2} -> q^{-1/2}.
  HalfLaurent bar() const;
  /// Multiplication by q^{k/2}.
  HalfLaurent shifted(int k) const;
  /// Part with exponents < 0.
  HalfLaurent negative_part() const;

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(HalfLaurent a, const HalfLaurent& b) { return a *= b; }
  HalfLaurent operator-() const;
  bool operator==(const HalfLaurent&) const = default;

  /// Sum of "c*q^(n/2)" terms with ascending n; "0" for zero.
  std::string to_string() const;

 private:
  std::vector<std::pair<int, Integer>> terms_;  // ascending exponents, no zeros
};

class QPoly {
 public:
  QPoly() = default;
  QPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<Integer> coefficients);

  static QPoly monomial(int k, const Integer& c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  Integer coefficient(int k) const;
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  QPoly operator-() const;
  bool operator==(const QPoly&) const = default;

  /// "c0 + c1*q + c2*q^2" over the nonzero terms.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Substitutes xi = q^{1/2} - q^{-1/2}.
HalfLaurent xi_to_half(const XiPoly& p);
/// Inverse of xi_to_half on its image; throws NotInXiSpan elsewhere.
XiPoly half_to_xi(const HalfLaurent& p);
HalfLaurent to_half(const QPoly& p);

}  // namespace heckebound
