#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "ffmin/element.hpp"

namespace ffmin {

/// Seeded generator. Streams for different labels are independent and reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::string_view label) : engine_(mix(seed, label)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish value in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Value in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : label) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL + h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

/// Polynomial with degree at most max_degree (zero allowed).
Poly random_poly(Rng& rng, std::uint64_t p, std::int64_t max_degree);
Poly random_nonzero_poly(Rng& rng, std::uint64_t p, std::int64_t max_degree);
/// Numerator and denominator degrees drawn uniformly up to max_degree.
RatFun random_ratfun(Rng& rng, std::uint64_t p, std::int64_t max_degree);
FFElem random_element(Rng& rng, const CurveModel& c, std::int64_t max_degree);
/// a + Y b with polynomial a, b.
FFElem random_integral_element(Rng& rng, const CurveModel& c, std::int64_t max_degree);

}  // namespace ffmin
