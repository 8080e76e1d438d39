#include "ffmin/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ffmin {

Poly::Poly(std::uint64_t p, std::vector<Residue> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

Poly Poly::from_ints(std::uint64_t p, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Residue> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(reduce_signed(v, p));
  return Poly(p, std::move(c));
}

Poly Poly::constant(Fp c) { return Poly(c.modulus(), {c.value()}); }

Poly Poly::monomial(Fp c, std::size_t k) {
  std::vector<Residue> coeffs(k + 1, 0);
  coeffs[k] = c.value();
  return Poly(c.modulus(), std::move(coeffs));
}

Poly Poly::linear_root(Fp x0) { return Poly(x0.modulus(), {neg_mod(x0.value(), x0.modulus()), 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same_field(const Poly& other) const {
  if (other.p_ != p_) throw std::invalid_argument("polynomials over different fields");
}

Degree Poly::degree() const {
  if (c_.empty()) return Degree::neg_inf();
  return static_cast<std::int64_t>(c_.size()) - 1;
}

Fp Poly::eval(Fp x0) const {
  Residue acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(mul_mod(acc, x0.value(), p_), *it, p_);
  return Fp(acc, p_);
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(p_);
  std::vector<Residue> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mul_mod(c_[i], i % p_, p_);
  return Poly(p_, std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * leading().inverse();
}

Poly Poly::taylor_shift(Fp x0) const {
  // Horner in the shifted variable: f(x0 + t) = (...(c_n (x0+t) + c_{n-1})(x0+t) ...).
  std::vector<Residue> out;
  const Residue a = x0.value();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    // out <- out * (t + a) + c
    out.push_back(0);
    for (std::size_t i = out.size() - 1; i > 0; --i) out[i] = add_mod(out[i - 1], mul_mod(out[i], a, p_), p_);
    out[0] = add_mod(mul_mod(out[0], a, p_), *it, p_);
  }
  return Poly(p_, std::move(out));
}

std::size_t Poly::ord_at(Fp x0) const {
  if (c_.empty()) throw std::domain_error("order of the zero polynomial");
  const Poly shifted = taylor_shift(x0);
  std::size_t k = 0;
  while (shifted.c_[k] == 0) ++k;
  return k;
}

Poly Poly::pow(unsigned e) const {
  Poly result(p_, {1});
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::operator-() const {
  std::vector<Residue> out(c_.size());
  std::transform(c_.begin(), c_.end(), out.begin(), [this](Residue c) { return neg_mod(c, p_); });
  return Poly(p_, std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  a.check_same_field(b);
  std::vector<Residue> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = add_mod(out[i], b.c_[i], a.p_);
  return Poly(a.p_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  a.check_same_field(b);
  std::vector<Residue> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = sub_mod(out[i], b.c_[i], a.p_);
  return Poly(a.p_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_field(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.p_);
  std::vector<Residue> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a.c_[i], b.c_[j], a.p_), a.p_);
    }
  }
  return Poly(a.p_, std::move(out));
}

Poly operator*(const Poly& a, Fp s) {
  if (s.modulus() != a.p_) throw std::invalid_argument("scalar from a different field");
  std::vector<Residue> out(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = mul_mod(a.c_[i], s.value(), a.p_);
  return Poly(a.p_, std::move(out));
}

std::string Poly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Residue c = c_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

PolyDivision poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.modulus() != b.modulus()) throw std::invalid_argument("polynomials over different fields");
  const std::uint64_t p = a.modulus();
  if (a.size() < b.size()) return {Poly(p), a};

  std::vector<Residue> rem = a.raw();
  const std::vector<Residue>& div = b.raw();
  const std::size_t db = div.size() - 1;
  const Residue lc_inv = inv_mod(div.back(), p);
  std::vector<Residue> quot(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    const Residue coef = mul_mod(rem[k], lc_inv, p);
    if (coef == 0) continue;
    const std::size_t shift = k - db;
    quot[shift] = coef;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = sub_mod(rem[shift + j], mul_mod(coef, div[j], p), p);
  }
  rem.resize(db);
  return {Poly(p, std::move(quot)), Poly(p, std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool poly_is_squarefree(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree test of the zero polynomial");
  const Poly d = f.derivative();
  if (d.is_zero()) return f.is_constant();
  return poly_gcd(f, d).is_constant();
}

}  // namespace ffmin
