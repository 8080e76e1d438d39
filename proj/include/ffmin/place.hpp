#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "ffmin/fp.hpp"

namespace ffmin {

/// A closed point of a hyperelliptic model Y^2 = f(X) lying over a GF(p)-rational
/// x-coordinate or over infinity.
class Place {
 public:
  enum class Kind : std::uint8_t { AffineSplit, AffineRamified, AffineInert, InfRamified, InfSplit, InfInert };

  static Place affine_split(Fp x0, Fp y0) { return Place(Kind::AffineSplit, x0.modulus(), x0.value(), y0.value(), 0); }
  static Place affine_ramified(Fp x0) { return Place(Kind::AffineRamified, x0.modulus(), x0.value(), 0, 0); }
  static Place affine_inert(Fp x0) { return Place(Kind::AffineInert, x0.modulus(), x0.value(), 0, 0); }
  static Place inf_ramified(std::uint64_t p) { return Place(Kind::InfRamified, p, 0, 0, 0); }
  /// sign is +1 or -1.
  static Place inf_split(std::uint64_t p, int sign);
  static Place inf_inert(std::uint64_t p) { return Place(Kind::InfInert, p, 0, 0, 0); }

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  bool is_infinite() const { return kind_ >= Kind::InfRamified; }
  bool is_ramified() const { return kind_ == Kind::AffineRamified || kind_ == Kind::InfRamified; }
  /// Residue degree: 2 for the inert variants, else 1.
  int degree() const { return kind_ == Kind::AffineInert || kind_ == Kind::InfInert ? 2 : 1; }
  bool is_rational() const { return degree() == 1; }
  Fp x0() const { return Fp(x0_, p_); }
  Fp y0() const { return Fp(y0_, p_); }
  int sign() const { return sign_; }

  /// Textual form accepted by the CLI place grammar where applicable.
  std::string to_string() const;

  // Affine places by x0, then variant, then y0; infinite places last.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
    return a.key() <=> b.key();
  }
  friend bool operator==(const Place& a, const Place& b) = default;

 private:
  Place(Kind kind, std::uint64_t p, Residue x0, Residue y0, int sign)
      : kind_(kind), p_(p), x0_(x0), y0_(y0), sign_(sign) {}

  std::tuple<bool, Residue, Kind, Residue, int, std::uint64_t> key() const {
    return {is_infinite(), x0_, kind_, y0_, -sign_, p_};
  }

  Kind kind_;
  std::uint64_t p_;
  Residue x0_;
  Residue y0_;
  int sign_;
};

/// Finite integer combination of places; zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;
  Divisor(const Place& place, std::int64_t coefficient) { add(place, coefficient); }

  std::int64_t coefficient(const Place& place) const;
  /// Sum of coefficient times residue degree.
  std::int64_t degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;
  std::size_t support_size() const { return terms_.size(); }

  Divisor& add(const Place& place, std::int64_t coefficient);

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend Divisor operator+(Divisor a, const Divisor& b);
  friend Divisor operator-(Divisor a, const Divisor& b);
  friend Divisor operator*(std::int64_t k, const Divisor& d);
  friend bool operator==(const Divisor& a, const Divisor& b) = default;
  friend auto operator<=>(const Divisor& a, const Divisor& b) = default;

  std::string to_string() const;

 private:
  std::map<Place, std::int64_t> terms_;
};

}  // namespace ffmin
