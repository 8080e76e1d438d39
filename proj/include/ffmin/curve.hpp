#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ffmin/place.hpp"
#include "ffmin/poly.hpp"

namespace ffmin {

struct Hyperelliptic {
  friend bool operator==(Hyperelliptic, Hyperelliptic) = default;
};

/// Y^m = f, used only for genus, discriminant and semigroup computations.
struct Superelliptic {
  int m;
  friend bool operator==(Superelliptic, Superelliptic) = default;
};

using CurveKind = std::variant<Hyperelliptic, Superelliptic>;

enum class InfinityKind { Ramified, Split, Inert };

std::string to_string(InfinityKind kind);

class CurveError : public std::invalid_argument {
 public:
  enum class Reason { NotPrime, EvenCharacteristic, ModulusTooLarge, NotSquarefree, DegreeTooSmall, ExponentNotCoprime, CharacteristicDividesExponent };

  CurveError(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// A validated curve model over GF(p). Copies share the immutable model data.
class CurveModel {
 public:
  CurveModel(std::uint64_t p, Poly f, CurveKind kind);

  std::uint64_t p() const { return d_->p; }
  const Poly& f() const { return d_->f; }
  const CurveKind& kind() const { return d_->kind; }
  bool is_hyperelliptic() const { return std::holds_alternative<Hyperelliptic>(d_->kind); }
  /// 2 for hyperelliptic models, m for Y^m = f.
  int exponent() const;
  std::int64_t degree_f() const { return d_->f.degree().value(); }
  std::int64_t genus() const { return d_->genus; }
  /// Hyperelliptic models only.
  InfinityKind infinity_kind() const;

  /// Curve equation in the CLI grammar, e.g. "y^2 = x^5 + 2*x + 1 over gf(7)".
  std::string describe() const;

  friend bool operator==(const CurveModel& a, const CurveModel& b) {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->f == b.d_->f && a.d_->kind == b.d_->kind);
  }

 private:
  struct Data {
    std::uint64_t p;
    Poly f;
    CurveKind kind;
    std::int64_t genus;
  };
  std::shared_ptr<const Data> d_;
};

CurveModel make_curve(std::uint64_t p, Poly f, CurveKind kind);

std::int64_t genus(const CurveModel& c);

struct InfinityPlaces {
  InfinityKind kind;
  std::vector<Place> places;
};

/// Places above X = infinity. Throws std::invalid_argument for superelliptic models.
InfinityPlaces infinity_places(const CurveModel& c);

/// Places above the rational x-coordinate x0.
std::vector<Place> affine_places(const CurveModel& c, Fp x0);

/// Throws std::invalid_argument if the place does not lie on the model.
void validate_place(const CurveModel& c, const Place& place);

/// Ramification index of the place over the X-line.
inline int ramification_index(const Place& place) { return place.is_ramified() ? 2 : 1; }

/// div(dX/Y) = (2g-2) * infinity on odd-degree models.
Divisor canonical_divisor(const CurveModel& c);

/// Degree in X of the discriminant of T^m - f.
std::int64_t discriminant_degree(const CurveModel& c);

bool is_tame_at_infinity(const CurveModel& c);

}  // namespace ffmin
