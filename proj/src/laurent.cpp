#include "ffmin/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffmin {

LaurentSeries::LaurentSeries(std::uint64_t p, std::int64_t lead_exponent, std::vector<Residue> coeffs,
                             std::int64_t precision)
    : p_(p), lead_(lead_exponent), c_(std::move(coeffs)), precision_(precision) {
  for (auto& c : c_) c %= p_;
  normalize();
}

void LaurentSeries::normalize() {
  if (precision_ < lead_) precision_ = lead_;
  const auto known = static_cast<std::size_t>(precision_ - lead_);
  if (c_.size() > known) c_.resize(known);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t skip = 0;
  while (skip < c_.size() && c_[skip] == 0) ++skip;
  if (skip == c_.size()) {
    c_.clear();
    lead_ = precision_;
    return;
  }
  if (skip > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
    lead_ += static_cast<std::int64_t>(skip);
  }
}

LaurentSeries LaurentSeries::at_point(const Poly& f, Fp x0, std::int64_t precision) {
  return LaurentSeries(f.modulus(), 0, f.taylor_shift(x0).raw(), precision);
}

LaurentSeries LaurentSeries::at_point(const RatFun& r, Fp x0, std::int64_t precision) {
  if (r.is_zero()) return zero(r.modulus(), precision);
  const std::int64_t ord = ord_at(r, x0).value();
  const std::int64_t rel = std::max<std::int64_t>(precision - ord, 1);
  const auto num = at_point(r.num(), x0, rel + static_cast<std::int64_t>(r.num().ord_at(x0)));
  const auto den = at_point(r.den(), x0, rel + static_cast<std::int64_t>(r.den().ord_at(x0)));
  return (num * den.inverse()).truncated(precision);
}

LaurentSeries LaurentSeries::at_infinity(const Poly& f, std::int64_t precision) {
  if (f.is_zero()) return zero(f.modulus(), precision);
  std::vector<Residue> rev(f.raw().rbegin(), f.raw().rend());
  return LaurentSeries(f.modulus(), -f.degree().value(), std::move(rev), precision);
}

LaurentSeries LaurentSeries::at_infinity(const RatFun& r, std::int64_t precision) {
  if (r.is_zero()) return zero(r.modulus(), precision);
  const std::int64_t ord = -ratfun_deg(r).value();
  const std::int64_t rel = std::max<std::int64_t>(precision - ord, 1);
  const auto num = at_infinity(r.num(), rel - r.num().degree().value());
  const auto den = at_infinity(r.den(), rel - r.den().degree().value());
  return (num * den.inverse()).truncated(precision);
}

Fp LaurentSeries::coefficient(std::int64_t e) const {
  if (e >= precision_) throw std::out_of_range("coefficient beyond series precision");
  if (e < lead_) return Fp(0, p_);
  const auto idx = static_cast<std::size_t>(e - lead_);
  return Fp(idx < c_.size() ? c_[idx] : 0, p_);
}

LaurentSeries LaurentSeries::truncated(std::int64_t precision) const {
  return LaurentSeries(p_, lead_, c_, std::min(precision, precision_));
}

LaurentSeries LaurentSeries::operator-() const {
  std::vector<Residue> out(c_.size());
  std::transform(c_.begin(), c_.end(), out.begin(), [this](Residue c) { return neg_mod(c, p_); });
  return LaurentSeries(p_, lead_, std::move(out), precision_);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("series over different fields");
  const std::int64_t prec = std::min(a.precision_, b.precision_);
  const std::int64_t lead = std::min(a.lead_, b.lead_);
  if (lead >= prec) return LaurentSeries::zero(a.p_, prec);
  std::vector<Residue> out(static_cast<std::size_t>(prec - lead), 0);
  auto accumulate = [&](const LaurentSeries& s) {
    for (std::size_t i = 0; i < s.c_.size(); ++i) {
      const std::int64_t e = s.lead_ + static_cast<std::int64_t>(i);
      if (e >= prec) break;
      auto& slot = out[static_cast<std::size_t>(e - lead)];
      slot = add_mod(slot, s.c_[i], a.p_);
    }
  };
  accumulate(a);
  accumulate(b);
  return LaurentSeries(a.p_, lead, std::move(out), prec);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("series over different fields");
  const std::int64_t lead = a.lead_ + b.lead_;
  // Zero up to precision on either side leaves only the absolute error term.
  if (a.is_zero() || b.is_zero()) {
    const std::int64_t prec = a.is_zero() && b.is_zero() ? a.precision_ + b.precision_
                              : a.is_zero()              ? a.precision_ + b.lead_
                                                         : b.precision_ + a.lead_;
    return LaurentSeries::zero(a.p_, prec);
  }
  const std::int64_t rel = std::min(a.relative_precision(), b.relative_precision());
  std::vector<Residue> out(static_cast<std::size_t>(rel), 0);
  for (std::size_t i = 0; i < a.c_.size() && static_cast<std::int64_t>(i) < rel; ++i) {
    for (std::size_t j = 0; j < b.c_.size() && static_cast<std::int64_t>(i + j) < rel; ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a.c_[i], b.c_[j], a.p_), a.p_);
    }
  }
  return LaurentSeries(a.p_, lead, std::move(out), lead + rel);
}

LaurentSeries operator*(const LaurentSeries& a, Fp s) {
  std::vector<Residue> out(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = mul_mod(a.c_[i], s.value(), a.p_);
  return LaurentSeries(a.p_, a.lead_, std::move(out), a.precision_);
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of a series that vanishes to its precision");
  const std::int64_t rel = relative_precision();
  const Residue c0_inv = inv_mod(c_[0], p_);
  std::vector<Residue> out(static_cast<std::size_t>(rel), 0);
  for (std::int64_t k = 0; k < rel; ++k) {
    Residue acc = k == 0 ? 1 : 0;
    for (std::int64_t i = 1; i <= k && i < static_cast<std::int64_t>(c_.size()); ++i) {
      acc = sub_mod(acc, mul_mod(c_[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(k - i)], p_), p_);
    }
    out[static_cast<std::size_t>(k)] = mul_mod(acc, c0_inv, p_);
  }
  return LaurentSeries(p_, -lead_, std::move(out), -lead_ + rel);
}

LaurentSeries series_sqrt(const LaurentSeries& s, std::int64_t prec) {
  const std::uint64_t p = s.modulus();
  if (s.is_zero()) throw std::domain_error("square root of a series vanishing to its precision");
  if (s.lead_exponent() % 2 != 0) throw std::domain_error("square root of a series with odd lead exponent");
  const auto root = fp_sqrt(s.leading_coefficient());
  if (!root) throw std::domain_error("square root of a series with non-square leading coefficient");

  const std::int64_t half = s.lead_exponent() / 2;
  const std::int64_t target = std::min(prec - half, s.relative_precision());
  if (target <= 0) return LaurentSeries::zero(p, prec);

  const Fp two_inv = Fp(2, p).inverse();
  LaurentSeries t(p, half, {root->value()}, half + 1);
  std::int64_t rel = 1;
  while (rel < target) {
    rel = std::min(2 * rel, target);
    const LaurentSeries s_rel = s.truncated(s.lead_exponent() + rel);
    // Lift the current approximation to the new precision before dividing.
    const LaurentSeries t_lifted(p, t.lead_exponent(),
                                 [&] {
                                   std::vector<Residue> c;
                                   for (std::int64_t e = t.lead_exponent(); e < t.precision(); ++e) {
                                     c.push_back(t.coefficient(e).value());
                                   }
                                   return c;
                                 }(),
                                 half + rel);
    t = (t_lifted + s_rel * t_lifted.inverse()) * two_inv;
  }
  return t.truncated(half + target);
}

}  // namespace ffmin
