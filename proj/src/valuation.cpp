#include "ffmin/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffmin {

namespace {

Order twice(Order v) { return v.is_pos_inf() ? v : Order(2 * v.value()); }
Order shifted(Order v, std::int64_t k) { return v + Order(k); }

// Order of Y in the local parameter of a split place.
std::int64_t y_order(const CurveModel& c, const Place& place) {
  return place.is_infinite() ? -(c.genus() + 1) : 0;
}

Order x_function_order(const Place& place, const RatFun& r) {
  return place.is_infinite() ? ord_at_infinity(r) : ord_at(r, place.x0());
}

Order split_valuation(const CurveModel& c, const Place& place, const FFElem& x) {
  const Order ord_a = x_function_order(place, x.a());
  const Order ord_b = x_function_order(place, x.b());
  const std::int64_t oy = y_order(c, place);
  const std::int64_t lower = std::min(ord_a, shifted(ord_b, oy)).value();
  // v_P(x) + v_{conj P}(x) = v(N(x)) and v_{conj P}(x) >= lower.
  const std::int64_t upper = x_function_order(place, norm(x)).value() - lower;
  const std::int64_t cap = 4 * c.degree_f() * ((upper - lower) + c.genus() + 4);

  for (std::int64_t n = 2 * 4; n <= 2 * cap; n *= 2) {
    const std::int64_t prec = lower + n;
    LaurentSeries sum = LaurentSeries::zero(c.p(), prec);
    if (!x.a().is_zero()) sum = sum + expand_x_function(place, x.a(), prec);
    if (!x.b().is_zero()) {
      const std::int64_t ob = ord_b.value();
      const auto y = expand_y(c, place, oy + n);
      sum = sum + y * expand_x_function(place, x.b(), ob + n);
    }
    if (!sum.is_zero()) return sum.lead_exponent();
    if (prec > upper) break;
  }
  throw InternalError("series expansion of a nonzero element vanished beyond its valuation bound");
}

}  // namespace

LaurentSeries expand_x_function(const Place& place, const RatFun& r, std::int64_t precision) {
  if (place.is_infinite()) return LaurentSeries::at_infinity(r, precision);
  return LaurentSeries::at_point(r, place.x0(), precision);
}

LaurentSeries expand_y(const CurveModel& c, const Place& place, std::int64_t precision) {
  if (place.kind() != Place::Kind::AffineSplit && place.kind() != Place::Kind::InfSplit) {
    throw std::invalid_argument("Y has a GF(p)-rational expansion only at split places");
  }
  const std::int64_t oy = y_order(c, place);
  const std::int64_t rel = std::max<std::int64_t>(precision - oy, 1);
  LaurentSeries y = place.is_infinite()
                        ? series_sqrt(LaurentSeries::at_infinity(c.f(), 2 * oy + rel), oy + rel)
                        : series_sqrt(LaurentSeries::at_point(c.f(), place.x0(), rel), rel);
  const bool flip = place.is_infinite() ? place.sign() < 0 : y.leading_coefficient() != place.y0();
  if (flip) y = -y;
  return y.truncated(precision);
}

Order valuation(const CurveModel& c, const Place& place, const FFElem& x) {
  if (!(x.curve() == c)) throw std::invalid_argument("element does not belong to this curve");
  validate_place(c, place);
  if (x.is_zero()) return Order::pos_inf();

  const std::int64_t g = c.genus();
  switch (place.kind()) {
    case Place::Kind::AffineRamified:
      return std::min(twice(ord_at(x.a(), place.x0())), shifted(twice(ord_at(x.b(), place.x0())), 1));
    case Place::Kind::AffineInert:
      return std::min(ord_at(x.a(), place.x0()), ord_at(x.b(), place.x0()));
    case Place::Kind::InfRamified:
      return std::min(twice(ord_at_infinity(x.a())), shifted(twice(ord_at_infinity(x.b())), -(2 * g + 1)));
    case Place::Kind::InfInert:
      return std::min(ord_at_infinity(x.a()), shifted(ord_at_infinity(x.b()), -(g + 1)));
    case Place::Kind::AffineSplit:
    case Place::Kind::InfSplit:
      return split_valuation(c, place, x);
  }
  throw std::logic_error("unhandled place kind");
}

Degree s_degree(const FFElem& x, std::span<const Place> S) {
  if (x.is_zero()) return Degree::neg_inf();
  std::int64_t total = 0;
  for (const auto& place : S) total += place.degree() * valuation(x.curve(), place, x).value();
  return -total;
}

Degree deg_S(const FFElem& x) {
  const auto inf = infinity_places(x.curve());
  const Degree by_valuations = s_degree(x, inf.places);
  const Degree by_norm = ratfun_deg(norm(x));
  if (by_valuations != by_norm) {
    throw InternalError("deg_S mismatch for " + x.to_string() + ": valuations give " + by_valuations.to_string() +
                        ", norm gives " + by_norm.to_string());
  }
  return by_valuations;
}

}  // namespace ffmin
