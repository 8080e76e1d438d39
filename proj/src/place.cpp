#include "ffmin/place.hpp"

#include <sstream>
#include <stdexcept>

namespace ffmin {

Place Place::inf_split(std::uint64_t p, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("infinite split place sign must be +1 or -1");
  return Place(Kind::InfSplit, p, 0, 0, sign);
}

std::string Place::to_string() const {
  switch (kind_) {
    case Kind::AffineSplit:
      return "x=" + std::to_string(x0_) + ",y=" + std::to_string(y0_);
    case Kind::AffineRamified:
      return "x=" + std::to_string(x0_);
    case Kind::AffineInert:
      return "x=" + std::to_string(x0_) + "(inert)";
    case Kind::InfRamified:
    case Kind::InfInert:
      return "inf";
    case Kind::InfSplit:
      return sign_ > 0 ? "inf+" : "inf-";
  }
  return "?";
}

std::int64_t Divisor::coefficient(const Place& place) const {
  auto it = terms_.find(place);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [place, n] : terms_) d += n * place.degree();
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [place, n] : terms_) {
    if (n < 0) return false;
  }
  return true;
}

Divisor& Divisor::add(const Place& place, std::int64_t coefficient) {
  if (coefficient == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(place, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Divisor operator+(Divisor a, const Divisor& b) {
  for (const auto& [place, n] : b.terms_) a.add(place, n);
  return a;
}

Divisor operator-(Divisor a, const Divisor& b) {
  for (const auto& [place, n] : b.terms_) a.add(place, -n);
  return a;
}

Divisor operator*(std::int64_t k, const Divisor& d) {
  Divisor out;
  for (const auto& [place, n] : d.terms_) out.add(place, k * n);
  return out;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [place, n] : terms_) {
    if (!first) os << (n < 0 ? " - " : " + ");
    else if (n < 0) os << '-';
    first = false;
    const std::int64_t mag = n < 0 ? -n : n;
    if (mag != 1) os << mag << '*';
    os << '[' << place.to_string() << ']';
  }
  return os.str();
}

}  // namespace ffmin
