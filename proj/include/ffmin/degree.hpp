#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ffmin {

/// An integer degree extended by -infinity, the degree of zero.
class Degree {
 public:
  constexpr Degree(std::int64_t value) : value_(value) {}

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }

  std::int64_t value() const {
    if (!value_) throw std::logic_error("Degree::value() on -inf");
    return *value_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(*a.value_ + *b.value_);
  }

  friend constexpr bool operator==(Degree a, Degree b) = default;

  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return b.is_neg_inf() <=> a.is_neg_inf();
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

 private:
  constexpr Degree() = default;
  std::optional<std::int64_t> value_;
};

/// A valuation: an integer extended by +infinity, the order of zero.
class Order {
 public:
  constexpr Order(std::int64_t value) : value_(value) {}

  static constexpr Order pos_inf() { return Order(); }

  constexpr bool is_pos_inf() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }

  std::int64_t value() const {
    if (!value_) throw std::logic_error("Order::value() on +inf");
    return *value_;
  }

  friend constexpr Order operator+(Order a, Order b) {
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    return Order(*a.value_ + *b.value_);
  }

  friend constexpr bool operator==(Order a, Order b) = default;

  friend constexpr std::strong_ordering operator<=>(Order a, Order b) {
    if (a.is_pos_inf() || b.is_pos_inf()) return a.is_pos_inf() <=> b.is_pos_inf();
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "+inf"; }

 private:
  constexpr Order() = default;
  std::optional<std::int64_t> value_;
};

/// -v, mapping +inf to -inf.
constexpr Degree negate(Order v) {
  return v.is_pos_inf() ? Degree::neg_inf() : Degree(-v.value());
}

/// -d, mapping -inf to +inf.
constexpr Order negate(Degree d) {
  return d.is_neg_inf() ? Order::pos_inf() : Order(-d.value());
}

/// Raised when two independent computations of the same quantity disagree.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ffmin
