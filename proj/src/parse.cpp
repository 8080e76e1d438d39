#include "ffmin/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <memory>
#include <optional>

namespace ffmin {

ParseError::ParseError(Code code, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      code_(code),
      line_(line),
      column_(column),
      message_(message) {}

std::string to_string(ParseError::Code code) {
  using C = ParseError::Code;
  switch (code) {
    case C::Syntax:
      return "syntax";
    case C::NotPrime:
      return "not_prime";
    case C::EvenCharacteristic:
      return "even_characteristic";
    case C::ModulusTooLarge:
      return "modulus_too_large";
    case C::NotSquarefree:
      return "not_squarefree";
    case C::DegreeTooSmall:
      return "degree_too_small";
    case C::BadExponent:
      return "bad_exponent";
    case C::DivisionByZero:
      return "division_by_zero";
    case C::BadPlace:
      return "bad_place";
  }
  return "?";
}

namespace {

using Code = ParseError::Code;

constexpr std::int64_t kMaxPower = 4096;

struct Token {
  enum class Kind { Int, Ident, Sym, End } kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view s, int column_offset) {
  std::vector<Token> out;
  int line = 1;
  int column = 1 + column_offset;
  std::size_t i = 0;
  const auto advance = [&] {
    if (s[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance();
      continue;
    }
    Token tok{Token::Kind::Sym, "", line, column};
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      tok.kind = Token::Kind::Int;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        tok.text += s[i];
        advance();
      }
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      tok.kind = Token::Kind::Ident;
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
        tok.text += static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
        advance();
      }
    } else if (std::string_view("+-*/^()=").find(ch) != std::string_view::npos) {
      tok.text = std::string(1, ch);
      advance();
    } else {
      throw ParseError(Code::Syntax, line, column, std::string("unexpected character '") + ch + "'");
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Token::Kind::End, "", line, column});
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == Token::Kind::End) return "end of input";
  return "'" + t.text + "'";
}

struct Node {
  enum class Kind { Num, X, Add, Sub, Mul, Div, Neg, Pow } kind;
  std::string literal;
  std::int64_t power = 0;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
  int line = 0;
  int column = 0;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Node::Kind kind, const Token& at, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->line = at.line;
  n->column = at.column;
  return n;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, bool allow_division) : tokens_(std::move(tokens)), allow_division_(allow_division) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool at_sym(char c) const { return peek().kind == Token::Kind::Sym && peek().text[0] == c; }
  bool at_ident(std::string_view name) const { return peek().kind == Token::Kind::Ident && peek().text == name; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(Code::Syntax, peek().line, peek().column, "expected " + expected + ", found " + describe(peek()));
  }

  const Token& expect_sym(char c) {
    if (!at_sym(c)) fail(std::string("'") + c + "'");
    return take();
  }
  const Token& expect_ident(std::string_view name) {
    if (!at_ident(name)) fail("'" + std::string(name) + "'");
    return take();
  }
  const Token& expect_int() {
    if (peek().kind != Token::Kind::Int) fail("an integer");
    return take();
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) fail("end of input");
  }

  NodePtr expr() {
    NodePtr left = term();
    while (at_sym('+') || at_sym('-')) {
      const Token& op = take();
      NodePtr right = term();
      left = make_node(op.text == "+" ? Node::Kind::Add : Node::Kind::Sub, op, std::move(left), std::move(right));
    }
    return left;
  }

 private:
  NodePtr term() {
    NodePtr left = unary();
    while (at_sym('*') || at_sym('/')) {
      const Token& op = take();
      if (op.text == "/" && !allow_division_) {
        throw ParseError(Code::Syntax, op.line, op.column, "division is not allowed here");
      }
      NodePtr right = unary();
      left = make_node(op.text == "*" ? Node::Kind::Mul : Node::Kind::Div, op, std::move(left), std::move(right));
    }
    return left;
  }

  NodePtr unary() {
    if (at_sym('-')) {
      const Token& op = take();
      return make_node(Node::Kind::Neg, op, unary());
    }
    if (at_sym('+')) {
      take();
      return unary();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (at_sym('^')) {
      const Token& op = take();
      const Token& e = expect_int();
      if (e.text.size() > 6 || std::stoll(e.text) > kMaxPower) {
        throw ParseError(Code::Syntax, e.line, e.column, "exponent exceeds " + std::to_string(kMaxPower));
      }
      auto n = make_node(Node::Kind::Pow, op, std::move(base));
      n->power = std::stoll(e.text);
      return n;
    }
    return base;
  }

  NodePtr atom() {
    if (peek().kind == Token::Kind::Int) {
      const Token& t = take();
      auto n = make_node(Node::Kind::Num, t);
      n->literal = t.text;
      return n;
    }
    if (at_ident("x")) return make_node(Node::Kind::X, take());
    if (at_sym('(')) {
      take();
      NodePtr inner = expr();
      expect_sym(')');
      return inner;
    }
    fail("a number, 'x' or '('");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool allow_division_;
};

Residue literal_mod(const std::string& digits, std::uint64_t p) {
  Residue r = 0;
  for (char d : digits) r = (r * 10 + static_cast<Residue>(d - '0')) % p;
  return r;
}

RatFun evaluate(const Node& n, std::uint64_t p) {
  switch (n.kind) {
    case Node::Kind::Num:
      return RatFun::constant(Fp(literal_mod(n.literal, p), p));
    case Node::Kind::X:
      return RatFun(Poly::x(p));
    case Node::Kind::Add:
      return evaluate(*n.lhs, p) + evaluate(*n.rhs, p);
    case Node::Kind::Sub:
      return evaluate(*n.lhs, p) - evaluate(*n.rhs, p);
    case Node::Kind::Mul:
      return evaluate(*n.lhs, p) * evaluate(*n.rhs, p);
    case Node::Kind::Div: {
      const RatFun d = evaluate(*n.rhs, p);
      if (d.is_zero()) throw ParseError(Code::DivisionByZero, n.line, n.column, "division by zero");
      return evaluate(*n.lhs, p) / d;
    }
    case Node::Kind::Neg:
      return -evaluate(*n.lhs, p);
    case Node::Kind::Pow: {
      const RatFun base = evaluate(*n.lhs, p);
      RatFun acc = RatFun::constant(Fp(1, p));
      for (std::int64_t i = 0; i < n.power; ++i) acc = acc * base;
      return acc;
    }
  }
  throw std::logic_error("unknown node");
}

std::optional<std::uint64_t> to_u64(const std::string& digits) {
  std::uint64_t v = 0;
  for (char d : digits) {
    const auto digit = static_cast<std::uint64_t>(d - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) return std::nullopt;
    v = v * 10 + digit;
  }
  return v;
}

void check_modulus(const Token& t) {
  const auto p = to_u64(t.text);
  if (!p || *p > kMaxPrime) throw ParseError(Code::ModulusTooLarge, t.line, t.column, t.text + " exceeds 2^31 - 1");
  if (!is_prime(*p)) throw ParseError(Code::NotPrime, t.line, t.column, t.text + " is not prime");
  if (*p == 2) throw ParseError(Code::EvenCharacteristic, t.line, t.column, "characteristic 2 is not supported");
}

RatFun parse_expression(std::string_view text, std::uint64_t p, bool allow_division, int column_offset) {
  Parser parser(tokenize(text, column_offset), allow_division);
  NodePtr root = parser.expr();
  parser.expect_end();
  return evaluate(*root, p);
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

}  // namespace

CurveSpec parse_curve(std::string_view text) {
  Parser parser(tokenize(text, 0), false);
  parser.expect_ident("y");
  parser.expect_sym('^');
  const Token m_tok = parser.expect_int();
  parser.expect_sym('=');
  const Token f_tok = parser.peek();
  NodePtr f_ast = parser.expr();
  parser.expect_ident("over");
  parser.expect_ident("gf");
  parser.expect_sym('(');
  const Token p_tok = parser.expect_int();
  parser.expect_sym(')');
  parser.expect_end();

  check_modulus(p_tok);
  const std::uint64_t p = *to_u64(p_tok.text);
  const auto m = to_u64(m_tok.text);
  if (!m || *m < 2 || *m > 1000) {
    throw ParseError(Code::BadExponent, m_tok.line, m_tok.column, "exponent must lie in [2, 1000]");
  }

  const RatFun f = evaluate(*f_ast, p);
  CurveSpec spec{p, std::string(text), f.num(), static_cast<int>(*m)};
  try {
    spec.model();
  } catch (const CurveError& e) {
    using R = CurveError::Reason;
    switch (e.reason()) {
      case R::NotSquarefree:
        throw ParseError(Code::NotSquarefree, f_tok.line, f_tok.column, e.what());
      case R::DegreeTooSmall:
        throw ParseError(Code::DegreeTooSmall, f_tok.line, f_tok.column, e.what());
      case R::ExponentNotCoprime:
      case R::CharacteristicDividesExponent:
        throw ParseError(Code::BadExponent, m_tok.line, m_tok.column, e.what());
      case R::NotPrime:
        throw ParseError(Code::NotPrime, p_tok.line, p_tok.column, e.what());
      case R::EvenCharacteristic:
        throw ParseError(Code::EvenCharacteristic, p_tok.line, p_tok.column, e.what());
      case R::ModulusTooLarge:
        throw ParseError(Code::ModulusTooLarge, p_tok.line, p_tok.column, e.what());
    }
    throw;
  }
  return spec;
}

std::string render(const CurveSpec& spec) {
  return "y^" + std::to_string(spec.m) + " = " + spec.f.to_string("x") + " over gf(" + std::to_string(spec.p) + ")";
}

RatFun parse_ratfun(std::string_view text, std::uint64_t p) { return parse_expression(text, p, true, 0); }

Poly parse_poly(std::string_view text, std::uint64_t p) { return parse_expression(text, p, false, 0).num(); }

FFElem parse_element(const CurveModel& c, std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    return FFElem(c, parse_expression(text, c.p(), true, 0), RatFun::zero(c.p()));
  }
  if (text.find(';', semi + 1) != std::string_view::npos) {
    throw ParseError(Code::Syntax, 1, static_cast<int>(text.find(';', semi + 1)) + 1, "expected one ';'");
  }
  const RatFun a = parse_expression(text.substr(0, semi), c.p(), true, 0);
  const RatFun b = parse_expression(text.substr(semi + 1), c.p(), true, static_cast<int>(semi) + 1);
  return FFElem(c, a, b);
}

std::vector<Place> parse_place(const CurveModel& c, std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto bad = [&](const std::string& why) -> ParseError {
    return ParseError(Code::BadPlace, 1, 1, "place '" + trim(text) + "': " + why);
  };
  if (!c.is_hyperelliptic()) throw bad("places are available on y^2 models only");
  const auto inf = infinity_places(c);
  if (s == "inf") return inf.places;
  if (s == "inf+" || s == "inf-") {
    if (inf.kind != InfinityKind::Split) throw bad("signed infinity needs split infinity");
    return {Place::inf_split(c.p(), s == "inf+" ? 1 : -1)};
  }

  const auto read_int = [&](std::string_view digits) -> Fp {
    bool negative = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      negative = digits[0] == '-';
      digits.remove_prefix(1);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw bad("expected an integer coordinate");
    }
    const Fp v(literal_mod(std::string(digits), c.p()), c.p());
    return negative ? -v : v;
  };

  if (s.rfind("x=", 0) != 0) throw bad("expected inf, inf+, inf-, x=<c> or x=<c>,y=<c>");
  const auto comma = s.find(',');
  const Fp x0 = read_int(std::string_view(s).substr(2, comma == std::string::npos ? std::string::npos : comma - 2));
  const auto fibre = affine_places(c, x0);
  if (comma == std::string::npos) return fibre;

  const std::string_view rest = std::string_view(s).substr(comma + 1);
  if (rest.rfind("y=", 0) != 0) throw bad("expected y=<c> after the comma");
  const Fp y0 = read_int(rest.substr(2));
  for (const auto& place : fibre) {
    if (place.kind() == Place::Kind::AffineSplit && place.y0() == y0) return {place};
    if (place.kind() == Place::Kind::AffineRamified && y0.value() == 0) return {place};
  }
  throw bad("(" + x0.to_string() + ", " + y0.to_string() + ") is not a rational point of the curve");
}

std::vector<Place> parse_places(const CurveModel& c, std::string_view text) {
  std::vector<Place> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const auto piece = trim(text.substr(start, end - start));
    if (!piece.empty()) {
      for (const auto& place : parse_place(c, piece)) out.push_back(place);
    }
    start = end + 1;
  }
  if (out.empty()) throw ParseError(Code::BadPlace, 1, 1, "empty place list");
  return out;
}

}  // namespace ffmin
