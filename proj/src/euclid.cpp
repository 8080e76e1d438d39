#include "ffmin/euclid.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <stdexcept>

#include "ffmin/valuation.hpp"

namespace ffmin {

namespace {

Degree twice(Degree d) { return d.is_neg_inf() ? d : Degree(2 * d.value()); }

}  // namespace

Degree reduce_formula(const CurveModel& c, const RatFun& frac_a, const RatFun& frac_b) {
  const std::int64_t g = c.genus();
  switch (c.infinity_kind()) {
    case InfinityKind::Inert:
      return twice(std::max(ratfun_deg(frac_a), ratfun_deg(frac_b) + Degree(g + 1)));
    case InfinityKind::Ramified:
      return std::max(twice(ratfun_deg(frac_a)), twice(ratfun_deg(frac_b)) + Degree(2 * g + 1));
    case InfinityKind::Split:
      break;
  }
  throw std::invalid_argument("no closed-form reduction for split infinity");
}

ReduceResult euclidean_reduce(const FFElem& x) {
  const CurveModel& c = x.curve();
  if (c.infinity_kind() == InfinityKind::Split) {
    throw std::invalid_argument("exact Euclidean reduction is unavailable for split infinity");
  }
  const auto [whole_a, frac_a] = proper_split(x.a());
  const auto [whole_b, frac_b] = proper_split(x.b());
  FFElem y(c, RatFun(whole_a), RatFun(whole_b));
  const Degree value = deg_S(x - y);
  const Degree expected = reduce_formula(c, frac_a, frac_b);
  if (value != expected) {
    throw InternalError("reduction of " + x.to_string() + ": deg_S gives " + value.to_string() + ", formula gives " +
                        expected.to_string());
  }
  return {std::move(y), value};
}

namespace {

// Raw-residue polynomial helpers for the enumeration inner loop.
using Coeffs = std::vector<Residue>;

Coeffs to_coeffs(std::uint64_t p, std::uint64_t index, std::int64_t length) {
  Coeffs out(static_cast<std::size_t>(length));
  for (auto& c : out) {
    c = index % p;
    index /= p;
  }
  return out;
}

// Coefficients from the top down, left-padded with zeros to a common length.
Coeffs top_down(const Poly& q, std::size_t length) {
  Coeffs out(length, 0);
  const auto& raw = q.raw();
  for (std::size_t i = 0; i < raw.size(); ++i) out[length - 1 - i] = raw[i];
  return out;
}

std::size_t common_prefix(const Coeffs& a, const Coeffs& b) {
  std::size_t k = 0;
  while (k < a.size() && a[k] == b[k]) ++k;
  return k;
}

std::uint64_t checked_count(std::uint64_t p, std::int64_t exponent, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::int64_t i = 0; i < exponent; ++i) {
    if (total > cap / p) throw EnumerationCapExceeded("brute-force enumeration exceeds the candidate cap");
    total *= p;
  }
  if (total > cap) throw EnumerationCapExceeded("brute-force enumeration exceeds the candidate cap");
  return total;
}

}  // namespace

Degree brute_force_min_around(const FFElem& x, const FFElem& y0, std::int64_t bound_c, std::int64_t bound_d,
                              BruteForceOptions options) {
  const CurveModel& c = x.curve();
  const std::uint64_t p = c.p();
  const std::int64_t len_c = std::max<std::int64_t>(bound_c + 1, 0);
  const std::int64_t len_d = std::max<std::int64_t>(bound_d + 1, 0);
  checked_count(p, len_c + len_d, options.max_candidates);

  // N(x - y) = (a - c)^2 - f (b - d)^2. Over the common denominator ad^2 bd^2:
  // numerator = (an - c ad)^2 bd^2 - f (bn - d bd)^2 ad^2, with c, d absorbing y0.
  const FFElem base = x - y0;
  const Poly& an = base.a().num();
  const Poly& ad = base.a().den();
  const Poly& bn = base.b().num();
  const Poly& bd = base.b().den();
  const Poly ad2 = ad * ad;
  const Poly bd2 = bd * bd;
  const Poly f_ad2 = c.f() * ad2;
  const std::int64_t shift = 2 * (ad.degree().value() + bd.degree().value());

  const std::uint64_t count_c = checked_count(p, len_c, options.max_candidates);
  const std::uint64_t count_d = checked_count(p, len_d, options.max_candidates);

  std::vector<Poly> lhs;
  lhs.reserve(count_c);
  for (std::uint64_t i = 0; i < count_c; ++i) {
    const Poly cpoly(p, to_coeffs(p, i, len_c));
    const Poly diff = an - cpoly * ad;
    lhs.push_back(diff * diff * bd2);
  }
  std::vector<Poly> rhs;
  rhs.reserve(count_d);
  for (std::uint64_t j = 0; j < count_d; ++j) {
    const Poly d(p, to_coeffs(p, j, len_d));
    const Poly diff = bn - d * bd;
    rhs.push_back(f_ad2 * diff * diff);
  }

  // deg(A - B) = length - 1 - (common top-down prefix of A and B). Over all pairs the
  // longest common prefix with a fixed B is attained by a neighbour of B in sorted order.
  std::size_t length = 1;
  for (const auto& q : lhs) length = std::max(length, q.size());
  for (const auto& q : rhs) length = std::max(length, q.size());
  std::vector<Coeffs> sorted;
  sorted.reserve(lhs.size());
  for (const auto& q : lhs) sorted.push_back(top_down(q, length));
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::size_t best_prefix = 0;
  for (const auto& q : rhs) {
    const Coeffs key = top_down(q, length);
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), key);
    if (it != sorted.end()) best_prefix = std::max(best_prefix, common_prefix(*it, key));
    if (it != sorted.begin()) best_prefix = std::max(best_prefix, common_prefix(*std::prev(it), key));
    if (best_prefix == length) break;
  }
  const bool best_is_zero = best_prefix == length;
  const auto best = static_cast<std::int64_t>(length - 1 - best_prefix);
  if (best_is_zero) return Degree::neg_inf();
  return best - shift;
}

Degree brute_force_min(const FFElem& x, std::int64_t degree_bound, BruteForceOptions options) {
  return brute_force_min_around(x, FFElem::zero(x.curve()), degree_bound, degree_bound, options);
}

std::string to_string(MinimumStatus s) { return s == MinimumStatus::Exact ? "EXACT" : "UPPER_BOUND"; }

std::string to_string(MinimumMethod m) {
  switch (m) {
    case MinimumMethod::Prop3:
      return "PROP3";
    case MinimumMethod::Thm10:
      return "THM10";
    case MinimumMethod::Thm2Mu:
      return "THM2_MU";
  }
  return "?";
}

FFElem singleton_witness(const CurveModel& c, const Place& P, std::int64_t mu_value) {
  std::optional<Place> Q;
  for (std::uint64_t x0 = 0; x0 < c.p() && !Q; ++x0) {
    for (const Place& cand : affine_places(c, Fp(x0, c.p()))) {
      if (cand.is_rational() && cand != P) {
        Q = cand;
        break;
      }
    }
  }
  // No other rational affine place: a degree-2 affine place serves as well.
  for (std::uint64_t x0 = 0; x0 < c.p() && !Q; ++x0) {
    for (const Place& cand : affine_places(c, Fp(x0, c.p()))) {
      if (cand != P) {
        Q = cand;
        break;
      }
    }
  }
  if (!Q) throw std::invalid_argument("no auxiliary affine place available for the witness");

  // Once deg((mu-1)P + kQ) >= 2g - 1, l grows by exactly one from (mu-1)P + kQ to mu P + kQ.
  const std::int64_t g = c.genus();
  for (std::int64_t k = 0; k <= 2 * g + 1; ++k) {
    const LBasis basis = l_space(c, Divisor(P, mu_value) + Divisor(*Q, k));
    for (const FFElem& fn : basis.functions) {
      if (valuation(c, P, fn) == Order(-mu_value)) return fn;
    }
  }
  throw InternalError("no function with a pole of order " + std::to_string(mu_value) + " at " + P.to_string());
}

MinimumResult minimum(const CurveModel& c, std::span<const Place> S, MinimumOptions options) {
  if (S.empty()) throw std::invalid_argument("minimum needs a nonempty set of places");
  std::vector<Place> places(S.begin(), S.end());
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  for (const auto& place : places) validate_place(c, place);

  if (places.size() == 1 && places[0].is_rational()) {
    const std::int64_t value = mu_singleton(c, places[0]);
    MinimumResult out{MinimumStatus::Exact, value, MinimumMethod::Prop3, std::nullopt, std::nullopt};
    if (options.with_witness) out.witness = singleton_witness(c, places[0], value);
    return out;
  }
  if (places.size() == 1 && places[0].kind() == Place::Kind::InfInert) {
    MinimumResult out{MinimumStatus::Exact, 2 * c.genus(), MinimumMethod::Thm10, std::nullopt, std::nullopt};
    if (options.with_witness) out.witness = FFElem::y(c) / FFElem::x(c);
    return out;
  }
  const MuResult m = mu(c, places, options.height_bound);
  return MinimumResult{MinimumStatus::UpperBound, m.value, MinimumMethod::Thm2Mu, std::nullopt, m};
}

}  // namespace ffmin
