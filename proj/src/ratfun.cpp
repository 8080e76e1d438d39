#include "ffmin/ratfun.hpp"

#include <stdexcept>

namespace ffmin {

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(Fp(1, num_.modulus()))) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.modulus() != den_.modulus()) throw std::invalid_argument("numerator and denominator over different fields");
  if (num_.is_zero()) {
    den_ = Poly::constant(Fp(1, num_.modulus()));
    return;
  }
  const Poly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = poly_divmod(num_, g).quotient;
    den_ = poly_divmod(den_, g).quotient;
  }
  const Fp lc_inv = den_.leading().inverse();
  num_ = num_ * lc_inv;
  den_ = den_ * lc_inv;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  return RatFun(den_, num_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_poly() && b.is_poly()) return RatFun(a.num_ * b.num_);
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

std::string RatFun::to_string(std::string_view var) const {
  if (is_poly()) return num_.to_string(var);
  auto wrap = [&](const Poly& q) {
    std::string s = q.to_string(var);
    return q.raw().size() > 1 && s.find(' ') != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

Degree ratfun_deg(const RatFun& r) {
  if (r.is_zero()) return Degree::neg_inf();
  return r.num().degree().value() - r.den().degree().value();
}

ProperSplit proper_split(const RatFun& r) {
  auto [q, rem] = poly_divmod(r.num(), r.den());
  return {q, RatFun(rem, r.den())};
}

Order ord_at(const RatFun& r, Fp x0) {
  if (r.is_zero()) return Order::pos_inf();
  return static_cast<std::int64_t>(r.num().ord_at(x0)) - static_cast<std::int64_t>(r.den().ord_at(x0));
}

}  // namespace ffmin
