#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ffmin/discriminant.hpp"
#include "ffmin/fp_matrix.hpp"
#include "ffmin/laurent.hpp"
#include "test_support.hpp"

using namespace ffmin;
using ffmin::testing::P;

TEST_CASE("fp_is_square matches enumeration of squares") {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    std::set<Residue> squares;
    for (Residue a = 0; a < p; ++a) squares.insert(a * a % p);
    for (Residue a = 0; a < p; ++a) CHECK(fp_is_square(Fp(a, p)) == (squares.count(a) == 1));
  }
  CHECK(fp_is_square(Fp(0, 7)));
  CHECK(fp_is_square(Fp(2, 7)));
  CHECK_FALSE(fp_is_square(Fp(3, 7)));
}

TEST_CASE("fp_sqrt returns the smaller root") {
  for (std::uint64_t p : {3u, 7u, 13u, 17u, 1'000'003u}) {
    for (Residue a = 1; a < std::min<std::uint64_t>(p, 200); ++a) {
      auto r = fp_sqrt(Fp(a, p));
      if (!fp_is_square(Fp(a, p))) {
        CHECK_FALSE(r.has_value());
        continue;
      }
      REQUIRE(r.has_value());
      CHECK(*r * *r == Fp(a, p));
      CHECK(r->value() <= p - r->value());
    }
  }
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK(is_prime(kMaxPrime));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("poly_divmod examples") {
  auto [q1, r1] = poly_divmod(P(7, {1, 0, 1}), P(7, {0, 1}));
  CHECK(q1 == P(7, {0, 1}));
  CHECK(r1 == P(7, {1}));

  auto [q2, r2] = poly_divmod(P(7, {0, 0, 0, 1}), P(7, {-1, 1}));
  CHECK(q2 == P(7, {1, 1, 1}));
  CHECK(r2 == P(7, {1}));

  auto [q3, r3] = poly_divmod(P(7, {1}), P(7, {0, 1}));
  CHECK(q3.is_zero());
  CHECK(r3 == P(7, {1}));

  CHECK_THROWS_AS(poly_divmod(P(7, {1}), Poly(7)), std::domain_error);
}

TEST_CASE("poly_divmod property: a = qb + r, deg r < deg b") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = trial % 2 ? 7 : 13;
    const Poly a = testing::random_poly(rng, p, static_cast<std::int64_t>(rng() % 12));
    const Poly b = testing::random_nonzero_poly(rng, p, static_cast<std::int64_t>(rng() % 6));
    auto [q, r] = poly_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("poly_gcd and squarefree") {
  CHECK(poly_gcd(P(7, {-1, 0, 1}), P(7, {-1, 1})) == P(7, {-1, 1}));
  CHECK(poly_gcd(P(7, {0, 0, 1}), P(7, {0, 0, 0, 1})) == P(7, {0, 0, 1}));
  CHECK(poly_gcd(P(7, {1, 0, 1}), P(7, {0, 2})) == P(7, {1}));
  CHECK(poly_gcd(P(7, {0, 0, 3}), Poly(7)) == P(7, {0, 0, 1}));

  CHECK_FALSE(poly_is_squarefree(P(7, {0, 0, 1})));
  CHECK(poly_is_squarefree(P(7, {1, 0, 1})));
  CHECK(poly_is_squarefree(P(7, {1, 2, 0, 0, 0, 1})));
  // X^7 - X^0 ... derivative vanishes in characteristic 7: a 7th power.
  CHECK_FALSE(poly_is_squarefree(P(7, {1, 0, 0, 0, 0, 0, 0, 1})));
}

TEST_CASE("taylor_shift agrees with evaluation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly f = testing::random_poly(rng, 11, 7);
    const Fp x0(rng() % 11, 11);
    const Poly g = f.taylor_shift(x0);
    for (Residue t = 0; t < 11; ++t) CHECK(g.eval(Fp(t, 11)) == f.eval(x0 + Fp(t, 11)));
  }
}

TEST_CASE("discriminant_in_T") {
  const std::uint64_t p = 7;
  const Poly f = P(p, {1, 2, 0, 0, 0, 1});
  // T^2 - f -> 4 f
  CHECK(discriminant_in_T(std::vector<Poly>{-f, Poly(p), P(p, {1})}) == f * Fp(4, p));
  // T^3 - f -> -27 f^2
  CHECK(discriminant_in_T(std::vector<Poly>{-f, Poly(p), Poly(p), P(p, {1})}) == f * f * Fp::from_int(-27, p));
  // T^2 - 1 -> 4
  CHECK(discriminant_in_T(std::vector<Poly>{P(p, {-1}), Poly(p), P(p, {1})}) == P(p, {4}));
  CHECK_THROWS_AS(discriminant_in_T(std::vector<Poly>{-f, Poly(p), P(p, {2})}), std::invalid_argument);
}

TEST_CASE("discriminant matches the root-difference product for split polynomials") {
  // g(T) = prod (T - r_i) over GF(13): disc = prod_{i<j} (r_i - r_j)^2.
  const std::uint64_t p = 13;
  const std::vector<std::int64_t> roots{1, 4, 6, 11};
  Poly g = P(p, {1});
  for (auto r : roots) g = g * P(p, {-r, 1});
  std::vector<Poly> coeffs;
  for (std::size_t i = 0; i < g.size(); ++i) coeffs.push_back(Poly::constant(g.coeff(i)));
  Fp expected(1, p);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Fp d = Fp::from_int(roots[i] - roots[j], p);
      expected = expected * d * d;
    }
  }
  CHECK(discriminant_in_T(coeffs) == Poly::constant(expected));
}

TEST_CASE("ratfun_deg and degree axioms") {
  const std::uint64_t p = 7;
  CHECK(ratfun_deg(RatFun(P(p, {1, 0, 1}), P(p, {0, 1}))) == Degree(1));
  CHECK(ratfun_deg(RatFun(P(p, {1}), P(p, {0, 1}))) == Degree(-1));
  CHECK(ratfun_deg(RatFun::zero(p)).is_neg_inf());

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const RatFun x = testing::random_ratfun(rng, p, 4, 4);
    const RatFun y = testing::random_ratfun(rng, p, 4, 4);
    if (x.is_zero() || y.is_zero()) continue;
    CHECK(ratfun_deg(x * y) == ratfun_deg(x) + ratfun_deg(y));
    CHECK(ratfun_deg(x + y) <= std::max(ratfun_deg(x), ratfun_deg(y)));
  }
}

TEST_CASE("RatFun canonical form") {
  const std::uint64_t p = 7;
  const RatFun r(P(p, {0, 2, 2}), P(p, {0, 3}));  // (2x^2 + 2x) / 3x = (2x + 2)/3
  CHECK(r.den() == P(p, {1}));
  CHECK(r.num() == P(p, {2, 2}) * Fp(3, p).inverse());
  CHECK_THROWS_AS(RatFun(P(p, {1}), Poly(p)), std::domain_error);
}

TEST_CASE("proper_split") {
  const std::uint64_t p = 7;
  auto s1 = proper_split(RatFun(P(p, {1, 0, 1}), P(p, {0, 1})));
  CHECK(s1.whole == P(p, {0, 1}));
  CHECK(s1.frac == RatFun(P(p, {1}), P(p, {0, 1})));

  auto s2 = proper_split(RatFun(P(p, {1}), P(p, {0, 1})));
  CHECK(s2.whole.is_zero());

  auto s3 = proper_split(RatFun(P(p, {1, 1, 0, 1}), P(p, {-1, 1})));
  CHECK(s3.whole == P(p, {2, 1, 1}));
  CHECK(s3.frac == RatFun(P(p, {3}), P(p, {-1, 1})));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const RatFun r = testing::random_ratfun(rng, p, 6, 3);
    auto [whole, frac] = proper_split(r);
    CHECK(RatFun(whole) + frac == r);
    CHECK(ratfun_deg(frac) <= Degree(-1));
  }
}

TEST_CASE("series_sqrt examples") {
  const std::uint64_t p = 7;
  const LaurentSeries one(p, 0, {1}, 5);
  CHECK(series_sqrt(one, 5) == one);

  const LaurentSeries s(p, 0, {1, 1}, 3);
  const LaurentSeries t = series_sqrt(s, 3);
  CHECK(t == LaurentSeries(p, 0, {1, 4, 6}, 3));
  CHECK((t * t) == s);

  const LaurentSeries four_u2(p, 2, {4}, 10);
  CHECK(series_sqrt(four_u2, 5) == LaurentSeries(p, 1, {2}, 5));

  CHECK_THROWS_AS(series_sqrt(LaurentSeries(p, 1, {1}, 5), 3), std::domain_error);
  CHECK_THROWS_AS(series_sqrt(LaurentSeries(p, 0, {3}, 5), 3), std::domain_error);
}

TEST_CASE("series_sqrt property: square reproduces input") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t p = trial % 2 ? 11 : 13;
    std::vector<Residue> c(12);
    for (auto& v : c) v = rng() % p;
    c[0] = 1 + rng() % (p - 1);
    const std::int64_t lead = 2 * static_cast<std::int64_t>(rng() % 5) - 4;
    const LaurentSeries base(p, lead, c, lead + 12);
    const LaurentSeries sq = base * base;
    const LaurentSeries root = series_sqrt(sq, lead + 12);
    CHECK((root * root) == sq);
    CHECK((root == base || root == -base));
  }
}

TEST_CASE("Laurent expansion of rational functions") {
  const std::uint64_t p = 11;
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const RatFun r = testing::random_ratfun(rng, p, 5, 4);
    if (r.is_zero()) continue;
    const Fp x0(rng() % p, p);
    const auto s = LaurentSeries::at_point(r, x0, 10);
    CHECK(s.lead_exponent() == ord_at(r, x0).value());
    // den * s reproduces num up to precision.
    const auto check = LaurentSeries::at_point(r.den(), x0, 10) * s;
    const auto num = LaurentSeries::at_point(r.num(), x0, check.precision());
    CHECK(check == num);
    const auto si = LaurentSeries::at_infinity(r, 6);
    CHECK(si.lead_exponent() == -ratfun_deg(r).value());
  }
}

TEST_CASE("kernel") {
  CHECK(kernel(FpMatrix(7, {{1, 0}, {0, 1}})).empty());
  CHECK(kernel(FpMatrix(7, {{0, 0}})).size() == 2);
  const auto k = kernel(FpMatrix(7, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == FpVector{1, 6});
}

TEST_CASE("kernel property: annihilates and has dimension cols - rank") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t p = 5;
    const std::size_t rows = rng() % 6;
    const std::size_t cols = 1 + rng() % 7;
    FpMatrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.raw(r, c) = rng() % 3 == 0 ? rng() % p : 0;
    }
    const auto basis = kernel(m);
    CHECK(basis.size() == cols - rank(m));
    for (const auto& v : basis) {
      for (std::size_t r = 0; r < rows; ++r) {
        Residue acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc = add_mod(acc, mul_mod(m.raw(r, c), v[c], p), p);
        CHECK(acc == 0);
      }
    }
  }
}
