#include "fsplit/parse.hpp"

#include <cctype>

namespace fsplit {

namespace {

struct Parser {
  const std::string& s;
  const RingPtr& ring;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(ParseErrorKind k, size_t at, const std::string& msg) {
    throw ParseError(k, at, msg + " at offset " + std::to_string(at));
  }

  long long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && s[pos] == '-')
      fail(ParseErrorKind::NegativeExponent, pos, "negative exponent");
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
      fail(ParseErrorKind::Syntax, pos, "expected integer");
    long long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1LL << 40)) fail(ParseErrorKind::Syntax, start, "integer too large");
      ++pos;
    }
    return v;
  }

  bool at_factor_start() {
    char c = peek();
    return c == '(' || std::isdigit((unsigned char)c) || std::isalpha((unsigned char)c) ||
           c == '_';
  }

  Polynomial parse_factor() {
    char c = peek();
    Polynomial base(ring);
    if (c == '(') {
      ++pos;
      base = parse_expr();
      if (peek() != ')') fail(ParseErrorKind::Syntax, pos, "expected ')'");
      ++pos;
    } else if (std::isdigit((unsigned char)c)) {
      base = Polynomial::constant(ring, parse_int());
    } else if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos;
      std::string name;
      while (pos < s.size() &&
             (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
        name += s[pos++];
      int idx = ring->var_index(name);
      if (idx < 0)
        fail(ParseErrorKind::UnknownVariable, start, "unknown variable '" + name + "'");
      base = Polynomial::variable(ring, idx);
    } else {
      fail(ParseErrorKind::Syntax, pos, "expected factor");
    }
    while (peek() == '^') {
      ++pos;
      base = base.pow(parse_int());
    }
    return base;
  }

  Polynomial parse_term() {
    Polynomial r = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        r = r * parse_factor();
      } else if (at_factor_start()) {
        r = r * parse_factor();  // implicit multiplication, e.g. "x^2y"
      } else {
        return r;
      }
    }
  }

  Polynomial parse_expr() {
    Polynomial r(ring);
    char c = peek();
    bool neg = false;
    if (c == '+' || c == '-') {
      neg = (c == '-');
      ++pos;
    }
    Polynomial t = parse_term();
    r = neg ? -t : t;
    for (;;) {
      c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        Polynomial u = parse_term();
        r = (c == '+') ? r + u : r - u;
      } else {
        return r;
      }
    }
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  Parser p{text, ring};
  Polynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError(ParseErrorKind::Syntax, p.pos,
                     "unexpected trailing input at offset " + std::to_string(p.pos));
  return r;
}

}  // namespace fsplit
