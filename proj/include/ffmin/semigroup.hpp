#pragma once

#include <cstdint>
#include <vector>

namespace ffmin {

/// Gaps of the numerical semigroup <m, r>: the Weierstrass gaps at a totally
/// ramified point of Y^m = f with deg f = r.
struct SemigroupGaps {
  std::int64_t m;
  std::int64_t r;
  std::vector<std::int64_t> gaps;
  std::int64_t genus;
  std::int64_t frobenius;
};

/// Throws std::invalid_argument unless m, r >= 2 and gcd(m, r) = 1.
SemigroupGaps semigroup_gaps(std::int64_t m, std::int64_t r);

/// l(nP) = #{s in <m, r> : s <= n} for n = 0..nmax.
std::vector<std::int64_t> ell_counts(std::int64_t m, std::int64_t r, std::int64_t nmax);

}  // namespace ffmin
