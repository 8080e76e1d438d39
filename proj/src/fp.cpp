#include "ffmin/fp.hpp"

#include <stdexcept>

namespace ffmin {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Residue pow_mod(Residue a, std::uint64_t e, std::uint64_t p) {
  Residue result = 1 % p;
  Residue base = a % p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

Residue inv_mod(Residue a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in GF(p)");
  // p prime: Fermat.
  return pow_mod(a, p - 2, p);
}

Residue reduce_signed(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return static_cast<Residue>(r);
}

Residue Fp::checked(Fp other) const {
  if (other.p_ != p_) throw std::invalid_argument("GF(p) modulus mismatch");
  return value_;
}

Fp Fp::inverse() const { return Fp(inv_mod(value_, p_), p_); }

bool fp_is_square(Fp a) {
  if (a.is_zero()) return true;
  return a.pow((a.modulus() - 1) / 2).value() == 1;
}

std::optional<Fp> fp_sqrt(Fp a) {
  const std::uint64_t p = a.modulus();
  if (a.is_zero()) return a;
  if (!fp_is_square(a)) return std::nullopt;

  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  std::uint64_t s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Residue z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

  Residue m = s;
  Residue c = pow_mod(z, q, p);
  Residue t = pow_mod(a.value(), q, p);
  Residue r = pow_mod(a.value(), (q + 1) / 2, p);
  while (t != 1) {
    Residue i = 0;
    Residue t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    Residue b = c;
    for (Residue j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  const Residue other = neg_mod(r, p);
  return Fp(r < other ? r : other, p);
}

}  // namespace ffmin
