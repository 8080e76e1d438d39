#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ffmin/degree.hpp"
#include "ffmin/fp.hpp"

namespace ffmin {

/// Dense univariate polynomial over GF(p), coefficients lowest degree first.
/// Canonical: no trailing zero coefficient; the zero polynomial is empty.
class Poly {
 public:
  explicit Poly(std::uint64_t p) : p_(p) {}
  Poly(std::uint64_t p, std::vector<Residue> coeffs);

  /// Integer coefficients, lowest degree first, reduced mod p.
  static Poly from_ints(std::uint64_t p, std::initializer_list<std::int64_t> coeffs);
  static Poly constant(Fp c);
  static Poly monomial(Fp c, std::size_t k);
  static Poly x(std::uint64_t p) { return monomial(Fp(1, p), 1); }
  /// X - x0
  static Poly linear_root(Fp x0);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Degree degree() const;
  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return c_.size(); }
  Fp coeff(std::size_t i) const { return Fp(i < c_.size() ? c_[i] : 0, p_); }
  Fp leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }
  const std::vector<Residue>& raw() const { return c_; }

  Fp eval(Fp x0) const;
  Poly derivative() const;
  Poly monic() const;
  /// f(x0 + t) as a polynomial in t.
  Poly taylor_shift(Fp x0) const;
  /// Multiplicity of x0 as a root; the polynomial must be nonzero.
  std::size_t ord_at(Fp x0) const;
  Poly pow(unsigned e) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, Fp s);
  friend Poly operator*(Fp s, const Poly& a) { return a * s; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  void check_same_field(const Poly& other) const;

  std::uint64_t p_;
  std::vector<Residue> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error for b = 0.
PolyDivision poly_divmod(const Poly& a, const Poly& b);

/// Monic gcd; both zero is rejected.
Poly poly_gcd(const Poly& a, const Poly& b);

/// True iff gcd(f, f') is constant; f must be nonzero.
bool poly_is_squarefree(const Poly& f);

}  // namespace ffmin
