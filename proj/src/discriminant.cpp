#include "ffmin/discriminant.hpp"

#include <stdexcept>

namespace ffmin {

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const std::uint64_t p = m[0][0].modulus();
  bool negate_result = false;
  Poly prev = Poly::constant(Fp(1, p));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k].is_zero()) ++sel;
      if (sel == n) return Poly(p);
      std::swap(m[k], m[sel]);
      negate_result = !negate_result;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Poly cross = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto [q, r] = poly_divmod(cross, prev);
        if (!r.is_zero()) throw InternalError("Bareiss step left a nonzero remainder");
        m[i][j] = std::move(q);
      }
    }
    prev = m[k][k];
  }
  return negate_result ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<std::vector<Poly>> sylvester_matrix(std::span<const Poly> g, std::span<const Poly> h) {
  if (g.empty() || h.empty()) throw std::invalid_argument("sylvester matrix of an empty polynomial");
  const std::uint64_t p = g[0].modulus();
  const std::size_t dg = g.size() - 1;
  const std::size_t dh = h.size() - 1;
  const std::size_t n = dg + dh;
  std::vector<std::vector<Poly>> s(n, std::vector<Poly>(n, Poly(p)));
  for (std::size_t r = 0; r < dh; ++r) {
    for (std::size_t i = 0; i <= dg; ++i) s[r][r + i] = g[dg - i];
  }
  for (std::size_t r = 0; r < dg; ++r) {
    for (std::size_t i = 0; i <= dh; ++i) s[dh + r][r + i] = h[dh - i];
  }
  return s;
}

Poly discriminant_in_T(std::span<const Poly> coeffs) {
  if (coeffs.size() < 2) throw std::invalid_argument("discriminant needs T-degree >= 1");
  const std::uint64_t p = coeffs[0].modulus();
  if (coeffs.back() != Poly::constant(Fp(1, p))) throw std::invalid_argument("discriminant_in_T needs a monic input");
  const std::size_t m = coeffs.size() - 1;
  if (m == 1) return Poly::constant(Fp(1, p));

  std::vector<Poly> deriv;
  for (std::size_t i = 1; i <= m; ++i) deriv.push_back(coeffs[i] * Fp(i % p, p));
  while (deriv.size() > 1 && deriv.back().is_zero()) deriv.pop_back();
  if (deriv.back().is_zero()) return Poly(p);

  Poly res = determinant(sylvester_matrix(coeffs, deriv));
  // Res(g, g') with deg g' < m - 1 (p | m) picks up a power of lc(g) = 1, no correction.
  if ((m * (m - 1) / 2) % 2 == 1) res = -res;
  return res;
}

}  // namespace ffmin
