#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ffmin/element.hpp"
#include "ffmin/valuation.hpp"

namespace ffmin::testing {

inline Poly P(std::uint64_t p, std::initializer_list<std::int64_t> c) { return Poly::from_ints(p, c); }

inline CurveModel hyper(std::uint64_t p, std::initializer_list<std::int64_t> f) {
  return CurveModel(p, Poly::from_ints(p, f), Hyperelliptic{});
}

inline Poly random_poly(std::mt19937_64& rng, std::uint64_t p, std::int64_t max_degree) {
  std::vector<Residue> c(static_cast<std::size_t>(max_degree + 1));
  for (auto& v : c) v = rng() % p;
  return Poly(p, std::move(c));
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, std::uint64_t p, std::int64_t max_degree) {
  while (true) {
    Poly q = random_poly(rng, p, max_degree);
    if (!q.is_zero()) return q;
  }
}

inline RatFun random_ratfun(std::mt19937_64& rng, std::uint64_t p, std::int64_t num_degree, std::int64_t den_degree) {
  return RatFun(random_poly(rng, p, num_degree), random_nonzero_poly(rng, p, den_degree));
}

inline FFElem random_element(std::mt19937_64& rng, const CurveModel& c, std::int64_t num_degree,
                             std::int64_t den_degree) {
  return FFElem(c, random_ratfun(rng, c.p(), num_degree, den_degree), random_ratfun(rng, c.p(), num_degree, den_degree));
}

}  // namespace ffmin::testing

namespace ffmin::testing {

// Every place over x0 = 0..p-1 followed by the places at infinity.
inline std::vector<Place> all_degree_one_fibres(const CurveModel& c) {
  std::vector<Place> out;
  for (Residue x0 = 0; x0 < c.p(); ++x0) {
    for (const auto& place : affine_places(c, Fp(x0, c.p()))) out.push_back(place);
  }
  for (const auto& place : infinity_places(c).places) out.push_back(place);
  return out;
}

inline std::vector<Place> rational_places(const CurveModel& c) {
  std::vector<Place> out;
  for (const auto& place : all_degree_one_fibres(c)) {
    if (place.is_rational()) out.push_back(place);
  }
  return out;
}

// Roots with multiplicity when the polynomial splits into linear factors over GF(p).
inline std::optional<std::vector<Residue>> linear_roots(Poly f) {
  std::vector<Residue> roots;
  const auto p = f.modulus();
  for (Residue r = 0; r < p && f.degree() > Degree(0);) {
    auto [q, rem] = poly_divmod(f, Poly::linear_root(Fp(r, p)));
    if (rem.is_zero()) {
      roots.push_back(r);
      f = q;
    } else {
      ++r;
    }
  }
  if (f.degree() > Degree(0)) return std::nullopt;
  return roots;
}

}  // namespace ffmin::testing
