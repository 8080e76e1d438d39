#include "ffmin/element.hpp"

#include <stdexcept>

namespace ffmin {

namespace {

void require_same_curve(const FFElem& x, const FFElem& y) {
  if (!(x.curve() == y.curve())) throw std::invalid_argument("elements of different function fields");
}

}  // namespace

FFElem::FFElem(CurveModel curve, RatFun a, RatFun b) : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {
  if (!curve_.is_hyperelliptic()) throw std::invalid_argument("element arithmetic needs a hyperelliptic model");
  if (a_.modulus() != curve_.p() || b_.modulus() != curve_.p()) {
    throw std::invalid_argument("element components over a different field");
  }
}

FFElem operator+(const FFElem& x, const FFElem& y) {
  require_same_curve(x, y);
  return FFElem(x.curve_, x.a_ + y.a_, x.b_ + y.b_);
}

FFElem operator-(const FFElem& x, const FFElem& y) {
  require_same_curve(x, y);
  return FFElem(x.curve_, x.a_ - y.a_, x.b_ - y.b_);
}

FFElem operator*(const FFElem& x, const FFElem& y) {
  require_same_curve(x, y);
  const RatFun f(x.curve_.f());
  return FFElem(x.curve_, x.a_ * y.a_ + f * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

FFElem operator/(const FFElem& x, const FFElem& y) {
  require_same_curve(x, y);
  const RatFun n = norm(y);
  if (n.is_zero()) throw std::domain_error("division by zero in the function field");
  const FFElem num = x * ff_conj(y);
  return FFElem(x.curve_, num.a_ / n, num.b_ / n);
}

bool operator==(const FFElem& x, const FFElem& y) { return x.curve_ == y.curve_ && x.a_ == y.a_ && x.b_ == y.b_; }

std::string FFElem::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (!a_.is_zero()) s = a_.to_string();
  if (!b_.is_zero()) {
    if (!s.empty()) s += " + ";
    s += "y*(" + b_.to_string() + ")";
  }
  return s;
}

FFElem ff_add(const FFElem& x, const FFElem& y) { return x + y; }
FFElem ff_mul(const FFElem& x, const FFElem& y) { return x * y; }
FFElem ff_conj(const FFElem& x) { return FFElem(x.curve(), x.a(), -x.b()); }

RatFun norm(const FFElem& x) { return x.a() * x.a() - RatFun(x.curve().f()) * x.b() * x.b(); }

}  // namespace ffmin
