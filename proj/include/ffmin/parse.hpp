#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ffmin/element.hpp"

namespace ffmin {

class ParseError : public std::runtime_error {
 public:
  enum class Code {
    Syntax,
    NotPrime,
    EvenCharacteristic,
    ModulusTooLarge,
    NotSquarefree,
    DegreeTooSmall,
    BadExponent,
    DivisionByZero,
    BadPlace,
  };

  ParseError(Code code, int line, int column, const std::string& message);

  Code code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  Code code_;
  int line_;
  int column_;
  std::string message_;
};

std::string to_string(ParseError::Code code);

/// `y^<m> = <polyexpr> over gf(<p>)`.
struct CurveSpec {
  std::uint64_t p;
  std::string text;
  Poly f;
  int m;

  CurveKind kind() const { return m == 2 ? CurveKind(Hyperelliptic{}) : CurveKind(Superelliptic{m}); }
  CurveModel model() const { return CurveModel(p, f, kind()); }
  friend bool operator==(const CurveSpec& a, const CurveSpec& b) { return a.p == b.p && a.f == b.f && a.m == b.m; }
};

/// Validated spec; semantic failures carry the position of the offending token.
CurveSpec parse_curve(std::string_view text);
std::string render(const CurveSpec& spec);

/// Rational-function expression in x over GF(p).
RatFun parse_ratfun(std::string_view text, std::uint64_t p);
/// Polynomial expression in x over GF(p); division is rejected.
Poly parse_poly(std::string_view text, std::uint64_t p);
/// "<a>;<b>" for the element a + y*b.
FFElem parse_element(const CurveModel& c, std::string_view text);

/// `inf`, `inf+`, `inf-`, `x=<c>`, `x=<c>,y=<c>`. `inf` and `x=<c>` expand to every place in the fibre.
std::vector<Place> parse_place(const CurveModel& c, std::string_view text);
/// ';'-separated place specs.
std::vector<Place> parse_places(const CurveModel& c, std::string_view text);

}  // namespace ffmin
