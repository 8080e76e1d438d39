#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace ffmin {

using Residue = std::uint64_t;

/// Largest supported characteristic; residues stay single-word and products fit in 64 bits.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);

// Raw residue arithmetic, operands already reduced.
inline Residue add_mod(Residue a, Residue b, std::uint64_t p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}
inline Residue sub_mod(Residue a, Residue b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
inline Residue neg_mod(Residue a, std::uint64_t p) { return a == 0 ? 0 : p - a; }
inline Residue mul_mod(Residue a, Residue b, std::uint64_t p) { return (a * b) % p; }
Residue pow_mod(Residue a, std::uint64_t e, std::uint64_t p);
Residue inv_mod(Residue a, std::uint64_t p);
Residue reduce_signed(std::int64_t v, std::uint64_t p);

/// An element of the prime field GF(p), p an odd prime.
class Fp {
 public:
  Fp(Residue value, std::uint64_t modulus) : value_(value % modulus), p_(modulus) {}

  static Fp from_int(std::int64_t v, std::uint64_t p) { return Fp(reduce_signed(v, p), p); }

  Residue value() const { return value_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  Fp operator-() const { return Fp(neg_mod(value_, p_), p_); }
  friend Fp operator+(Fp a, Fp b) { return Fp(add_mod(a.value_, b.checked(a), a.p_), a.p_); }
  friend Fp operator-(Fp a, Fp b) { return Fp(sub_mod(a.value_, b.checked(a), a.p_), a.p_); }
  friend Fp operator*(Fp a, Fp b) { return Fp(mul_mod(a.value_, b.checked(a), a.p_), a.p_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  friend bool operator==(Fp a, Fp b) = default;

  Fp inverse() const;
  Fp pow(std::uint64_t e) const { return Fp(pow_mod(value_, e, p_), p_); }

  std::string to_string() const { return std::to_string(value_); }

 private:
  Residue checked(Fp other) const;

  Residue value_;
  std::uint64_t p_;
};

/// Euler criterion; zero counts as a square.
bool fp_is_square(Fp a);

/// The square root in [0, p-1] with the smaller representative, or nullopt for non-squares.
std::optional<Fp> fp_sqrt(Fp a);

}  // namespace ffmin
