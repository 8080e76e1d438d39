#include "ffmin/rng.hpp"

namespace ffmin {

Poly random_poly(Rng& rng, std::uint64_t p, std::int64_t max_degree) {
  if (max_degree < 0) return Poly(p);
  const std::int64_t degree = rng.between(0, max_degree);
  std::vector<Residue> coeffs(static_cast<std::size_t>(degree + 1));
  for (auto& c : coeffs) c = rng.below(p);
  return Poly(p, std::move(coeffs));
}

Poly random_nonzero_poly(Rng& rng, std::uint64_t p, std::int64_t max_degree) {
  while (true) {
    Poly q = random_poly(rng, p, max_degree);
    if (!q.is_zero()) return q;
  }
}

RatFun random_ratfun(Rng& rng, std::uint64_t p, std::int64_t max_degree) {
  Poly num = random_poly(rng, p, max_degree);
  Poly den = random_nonzero_poly(rng, p, max_degree);
  return RatFun(std::move(num), std::move(den));
}

FFElem random_element(Rng& rng, const CurveModel& c, std::int64_t max_degree) {
  RatFun a = random_ratfun(rng, c.p(), max_degree);
  RatFun b = random_ratfun(rng, c.p(), max_degree);
  return FFElem(c, std::move(a), std::move(b));
}

FFElem random_integral_element(Rng& rng, const CurveModel& c, std::int64_t max_degree) {
  return FFElem(c, RatFun(random_poly(rng, c.p(), max_degree)), RatFun(random_poly(rng, c.p(), max_degree)));
}

}  // namespace ffmin
