#include "ffmin/curve.hpp"

#include <numeric>

#include "ffmin/discriminant.hpp"

namespace ffmin {

std::string to_string(InfinityKind kind) {
  switch (kind) {
    case InfinityKind::Ramified:
      return "ramified";
    case InfinityKind::Split:
      return "split";
    case InfinityKind::Inert:
      return "inert";
  }
  return "?";
}

CurveModel::CurveModel(std::uint64_t p, Poly f, CurveKind kind) {
  using R = CurveError::Reason;
  if (p > kMaxPrime) throw CurveError(R::ModulusTooLarge, "characteristic exceeds 2^31 - 1");
  if (!is_prime(p)) throw CurveError(R::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw CurveError(R::EvenCharacteristic, "characteristic 2 is not supported");
  if (f.modulus() != p) throw std::invalid_argument("f is defined over a different field");
  if (f.is_zero() || f.is_constant()) throw CurveError(R::DegreeTooSmall, "f must be nonconstant");
  if (!poly_is_squarefree(f)) throw CurveError(R::NotSquarefree, "f = " + f.to_string() + " is not squarefree");

  const std::int64_t n = f.degree().value();
  std::int64_t g = 0;
  if (std::holds_alternative<Hyperelliptic>(kind)) {
    if (n < 3) throw CurveError(R::DegreeTooSmall, "hyperelliptic models need deg f >= 3");
    g = (n - 1) / 2;
  } else {
    const int m = std::get<Superelliptic>(kind).m;
    if (m < 2) throw CurveError(R::ExponentNotCoprime, "superelliptic exponent must be >= 2");
    if (std::gcd<std::int64_t, std::int64_t>(m, n) != 1) {
      throw CurveError(R::ExponentNotCoprime, "gcd(m, deg f) must be 1");
    }
    if (static_cast<std::uint64_t>(m) % p == 0) throw CurveError(R::CharacteristicDividesExponent, "p divides m");
    g = (m - 1) * (n - 1) / 2;
  }
  d_ = std::make_shared<const Data>(Data{p, std::move(f), std::move(kind), g});
}

int CurveModel::exponent() const {
  if (const auto* s = std::get_if<Superelliptic>(&d_->kind)) return s->m;
  return 2;
}

InfinityKind CurveModel::infinity_kind() const {
  if (!is_hyperelliptic()) throw std::invalid_argument("infinity kind is only defined for hyperelliptic models");
  if (degree_f() % 2 != 0) return InfinityKind::Ramified;
  return fp_is_square(f().leading()) ? InfinityKind::Split : InfinityKind::Inert;
}

std::string CurveModel::describe() const {
  return "y^" + std::to_string(exponent()) + " = " + f().to_string("x") + " over gf(" + std::to_string(p()) + ")";
}

CurveModel make_curve(std::uint64_t p, Poly f, CurveKind kind) { return CurveModel(p, std::move(f), std::move(kind)); }

std::int64_t genus(const CurveModel& c) { return c.genus(); }

InfinityPlaces infinity_places(const CurveModel& c) {
  const InfinityKind kind = c.infinity_kind();
  switch (kind) {
    case InfinityKind::Ramified:
      return {kind, {Place::inf_ramified(c.p())}};
    case InfinityKind::Split:
      return {kind, {Place::inf_split(c.p(), 1), Place::inf_split(c.p(), -1)}};
    case InfinityKind::Inert:
      return {kind, {Place::inf_inert(c.p())}};
  }
  return {kind, {}};
}

std::vector<Place> affine_places(const CurveModel& c, Fp x0) {
  if (!c.is_hyperelliptic()) throw std::invalid_argument("places are only modelled on hyperelliptic curves");
  if (x0.modulus() != c.p()) throw std::invalid_argument("x-coordinate from a different field");
  const Fp v = c.f().eval(x0);
  if (v.is_zero()) return {Place::affine_ramified(x0)};
  if (auto root = fp_sqrt(v)) return {Place::affine_split(x0, *root), Place::affine_split(x0, -*root)};
  return {Place::affine_inert(x0)};
}

void validate_place(const CurveModel& c, const Place& place) {
  if (!c.is_hyperelliptic()) throw std::invalid_argument("places are only modelled on hyperelliptic curves");
  if (place.modulus() != c.p()) throw std::invalid_argument("place " + place.to_string() + " is over a different field");
  bool ok = false;
  switch (place.kind()) {
    case Place::Kind::AffineSplit: {
      const Fp v = c.f().eval(place.x0());
      ok = !v.is_zero() && place.y0() * place.y0() == v;
      break;
    }
    case Place::Kind::AffineRamified:
      ok = c.f().eval(place.x0()).is_zero();
      break;
    case Place::Kind::AffineInert:
      ok = !fp_is_square(c.f().eval(place.x0()));
      break;
    case Place::Kind::InfRamified:
      ok = c.infinity_kind() == InfinityKind::Ramified;
      break;
    case Place::Kind::InfSplit:
      ok = c.infinity_kind() == InfinityKind::Split;
      break;
    case Place::Kind::InfInert:
      ok = c.infinity_kind() == InfinityKind::Inert;
      break;
  }
  if (!ok) throw std::invalid_argument("place " + place.to_string() + " does not lie on " + c.describe());
}

Divisor canonical_divisor(const CurveModel& c) {
  if (!c.is_hyperelliptic() || c.infinity_kind() != InfinityKind::Ramified) {
    throw std::invalid_argument("canonical divisor is materialized for odd-degree hyperelliptic models only");
  }
  Divisor w(Place::inf_ramified(c.p()), 2 * c.genus() - 2);
  if (w.degree() != 2 * c.genus() - 2) throw InternalError("canonical divisor has the wrong degree");
  return w;
}

std::int64_t discriminant_degree(const CurveModel& c) {
  const std::uint64_t p = c.p();
  PolyInT g(static_cast<std::size_t>(c.exponent()) + 1, Poly(p));
  g.front() = -c.f();
  g.back() = Poly::constant(Fp(1, p));
  return discriminant_in_T(g).degree().value();
}

bool is_tame_at_infinity(const CurveModel& c) {
  // Ramification indices above infinity divide the exponent m, and p does not divide m.
  return static_cast<std::uint64_t>(c.exponent()) % c.p() != 0;
}

}  // namespace ffmin
