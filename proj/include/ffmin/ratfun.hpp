#pragma once

#include <string>
#include <string_view>

#include "ffmin/poly.hpp"

namespace ffmin {

/// Element of GF(p)(X) kept in reduced form: gcd(num, den) = 1, den monic.
class RatFun {
 public:
  explicit RatFun(Poly num);
  RatFun(Poly num, Poly den);

  static RatFun zero(std::uint64_t p) { return RatFun(Poly(p)); }
  static RatFun constant(Fp c) { return RatFun(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  std::uint64_t modulus() const { return num_.modulus(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }

  RatFun inverse() const;

  RatFun operator-() const { return RatFun(-num_, den_, Canonical{}); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  std::string to_string(std::string_view var = "x") const;

 private:
  struct Canonical {};
  RatFun(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// deg(num) - deg(den); -inf for zero.
Degree ratfun_deg(const RatFun& r);

struct ProperSplit {
  Poly whole;
  RatFun frac;
};

/// r = whole + frac with ratfun_deg(frac) <= -1.
ProperSplit proper_split(const RatFun& r);

/// (X - x0)-adic order.
Order ord_at(const RatFun& r, Fp x0);

/// Order at the infinite place of GF(p)(X), i.e. -ratfun_deg.
inline Order ord_at_infinity(const RatFun& r) { return negate(ratfun_deg(r)); }

}  // namespace ffmin
