#pragma once

#include <cstdint>
#include <vector>

#include "ffmin/ratfun.hpp"

namespace ffmin {

/// Truncated Laurent series sum_{i >= lead} c_i t^i + O(t^precision) over GF(p).
///
/// The leading stored coefficient is nonzero. A series known to vanish up to its
/// precision has no coefficients and lead_exponent() == precision().
class LaurentSeries {
 public:
  LaurentSeries(std::uint64_t p, std::int64_t lead_exponent, std::vector<Residue> coeffs, std::int64_t precision);

  static LaurentSeries zero(std::uint64_t p, std::int64_t precision) { return {p, precision, {}, precision}; }
  /// Expansion of f in t = X - x0, exact up to the given absolute precision.
  static LaurentSeries at_point(const Poly& f, Fp x0, std::int64_t precision);
  static LaurentSeries at_point(const RatFun& r, Fp x0, std::int64_t precision);
  /// Expansion in t = 1/X.
  static LaurentSeries at_infinity(const Poly& f, std::int64_t precision);
  static LaurentSeries at_infinity(const RatFun& r, std::int64_t precision);

  std::uint64_t modulus() const { return p_; }
  std::int64_t lead_exponent() const { return lead_; }
  std::int64_t precision() const { return precision_; }
  /// Number of known terms past the leading exponent.
  std::int64_t relative_precision() const { return precision_ - lead_; }
  bool is_zero() const { return c_.empty(); }
  Fp leading_coefficient() const { return Fp(c_.empty() ? 0 : c_.front(), p_); }
  /// Coefficient of t^e; e must be below the precision.
  Fp coefficient(std::int64_t e) const;

  LaurentSeries truncated(std::int64_t precision) const;
  LaurentSeries inverse() const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, Fp s);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

 private:
  void normalize();

  std::uint64_t p_;
  std::int64_t lead_;
  std::vector<Residue> c_;
  std::int64_t precision_;
};

/// Square root by Newton iteration t <- (t + s/t)/2, to absolute precision `prec`
/// (capped by what s determines). The branch has leading coefficient equal to the
/// smaller representative of the square root of s's leading coefficient.
/// Throws std::domain_error for odd lead exponent, non-square leading coefficient, or s = 0.
LaurentSeries series_sqrt(const LaurentSeries& s, std::int64_t prec);

}  // namespace ffmin
