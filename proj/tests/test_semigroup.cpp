#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "ffmin/semigroup.hpp"

using namespace ffmin;

namespace {

// Oracle: mark every i*m + j*r below m*r.
std::vector<std::int64_t> gaps_by_marking(std::int64_t m, std::int64_t r) {
  std::set<std::int64_t> members;
  for (std::int64_t i = 0; i * m <= m * r; ++i) {
    for (std::int64_t j = 0; i * m + j * r <= m * r; ++j) members.insert(i * m + j * r);
  }
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n < m * r; ++n) {
    if (!members.count(n)) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("semigroup_gaps examples") {
  const auto a = semigroup_gaps(2, 5);
  CHECK(a.gaps == std::vector<std::int64_t>{1, 3});
  CHECK(a.genus == 2);
  CHECK(a.frobenius == 3);

  const auto b = semigroup_gaps(3, 4);
  CHECK(b.gaps == std::vector<std::int64_t>{1, 2, 5});
  CHECK(b.genus == 3);
  CHECK(b.frobenius == 5);

  const auto c = semigroup_gaps(2, 3);
  CHECK(c.gaps == std::vector<std::int64_t>{1});
  CHECK(c.genus == 1);
  CHECK(c.frobenius == 1);

  CHECK_THROWS_AS(semigroup_gaps(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(semigroup_gaps(1, 3), std::invalid_argument);
}

TEST_CASE("semigroup invariants for all coprime pairs with mr <= 100") {
  for (std::int64_t m = 2; m <= 50; ++m) {
    for (std::int64_t r = 2; m * r <= 100; ++r) {
      if (std::gcd(m, r) != 1) continue;
      const auto s = semigroup_gaps(m, r);
      CHECK(s.gaps == gaps_by_marking(m, r));
      CHECK(static_cast<std::int64_t>(s.gaps.size()) == (m - 1) * (r - 1) / 2);
      CHECK(s.genus == (m - 1) * (r - 1) / 2);
      CHECK(s.frobenius == m * r - m - r);
      CHECK(s.gaps.back() == s.frobenius);
      CHECK(s.frobenius == 2 * s.genus - 1);
    }
  }
}

TEST_CASE("ell_counts") {
  CHECK(ell_counts(2, 5, 4) == std::vector<std::int64_t>{1, 1, 2, 2, 3});
  CHECK(ell_counts(3, 7, 0) == std::vector<std::int64_t>{1});
  CHECK(ell_counts(2, 5, 3).back() == 2);

  for (const auto& [m, r] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 7}, {3, 4}, {5, 7}, {3, 10}}) {
    const auto g = (m - 1) * (r - 1) / 2;
    const auto counts = ell_counts(m, r, 3 * g + 5);
    for (std::size_t n = 1; n < counts.size(); ++n) {
      const auto step = counts[n] - counts[n - 1];
      CHECK((step == 0 || step == 1));
      if (static_cast<std::int64_t>(n) >= 2 * g - 1) CHECK(counts[n] == static_cast<std::int64_t>(n) - g + 1);
    }
  }
}
