#include "ffmin/semigroup.hpp"

#include <numeric>
#include <stdexcept>

namespace ffmin {

namespace {

void check_generators(std::int64_t m, std::int64_t r) {
  if (m < 2 || r < 2) throw std::invalid_argument("semigroup generators must be >= 2");
  if (std::gcd(m, r) != 1) throw std::invalid_argument("semigroup generators must be coprime");
}

// member[s] for s = 0..limit.
std::vector<bool> membership(std::int64_t m, std::int64_t r, std::int64_t limit) {
  std::vector<bool> member(static_cast<std::size_t>(limit + 1), false);
  for (std::int64_t j = 0; j * r <= limit; ++j) {
    for (std::int64_t s = j * r; s <= limit; s += m) member[static_cast<std::size_t>(s)] = true;
  }
  return member;
}

}  // namespace

SemigroupGaps semigroup_gaps(std::int64_t m, std::int64_t r) {
  check_generators(m, r);
  const auto member = membership(m, r, m * r);
  SemigroupGaps out{m, r, {}, 0, 0};
  for (std::int64_t s = 1; s <= m * r; ++s) {
    if (!member[static_cast<std::size_t>(s)]) out.gaps.push_back(s);
  }
  out.genus = static_cast<std::int64_t>(out.gaps.size());
  out.frobenius = out.gaps.empty() ? -1 : out.gaps.back();
  return out;
}

std::vector<std::int64_t> ell_counts(std::int64_t m, std::int64_t r, std::int64_t nmax) {
  check_generators(m, r);
  if (nmax < 0) return {};
  const auto member = membership(m, r, nmax);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(nmax + 1));
  std::int64_t count = 0;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    if (member[static_cast<std::size_t>(n)]) ++count;
    out.push_back(count);
  }
  return out;
}

}  // namespace ffmin
