#pragma once

#include <string>

#include "ffmin/curve.hpp"
#include "ffmin/ratfun.hpp"

namespace ffmin {

/// Element a + Y*b of K = GF(p)(X)[Y]/(Y^2 - f), a and b in GF(p)(X).
class FFElem {
 public:
  FFElem(CurveModel curve, RatFun a, RatFun b);

  static FFElem zero(const CurveModel& c) { return FFElem(c, RatFun::zero(c.p()), RatFun::zero(c.p())); }
  static FFElem constant(const CurveModel& c, Fp v) { return FFElem(c, RatFun::constant(v), RatFun::zero(c.p())); }
  static FFElem from_x(const CurveModel& c, RatFun a) { return FFElem(c, std::move(a), RatFun::zero(c.p())); }
  static FFElem x(const CurveModel& c) { return from_x(c, RatFun(Poly::x(c.p()))); }
  static FFElem y(const CurveModel& c) {
    return FFElem(c, RatFun::zero(c.p()), RatFun::constant(Fp(1, c.p())));
  }

  const CurveModel& curve() const { return curve_; }
  const RatFun& a() const { return a_; }
  const RatFun& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// Both components are polynomials, i.e. the element lies in GF(p)[X, Y].
  bool is_integral() const { return a_.is_poly() && b_.is_poly(); }

  FFElem operator-() const { return FFElem(curve_, -a_, -b_); }
  friend FFElem operator+(const FFElem& x, const FFElem& y);
  friend FFElem operator-(const FFElem& x, const FFElem& y);
  friend FFElem operator*(const FFElem& x, const FFElem& y);
  friend FFElem operator/(const FFElem& x, const FFElem& y);
  friend bool operator==(const FFElem& x, const FFElem& y);

  std::string to_string() const;

 private:
  CurveModel curve_;
  RatFun a_;
  RatFun b_;
};

FFElem ff_add(const FFElem& x, const FFElem& y);
FFElem ff_mul(const FFElem& x, const FFElem& y);
/// a + Yb -> a - Yb.
FFElem ff_conj(const FFElem& x);

/// N(a + Yb) = a^2 - f b^2.
RatFun norm(const FFElem& x);

}  // namespace ffmin
