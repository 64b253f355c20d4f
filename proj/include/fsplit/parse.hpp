#ifndef FSPLIT_PARSE_HPP
#define FSPLIT_PARSE_HPP

#include <stdexcept>
#include <string>

#include "fsplit/poly.hpp"

namespace fsplit {

enum class ParseErrorKind { Syntax, UnknownVariable, NegativeExponent };

struct ParseError : std::runtime_error {
  ParseErrorKind error_kind;
  size_t position;  // 0-based character offset into the input
  ParseError(ParseErrorKind k, size_t pos, const std::string& msg)
      : std::runtime_error(msg), error_kind(k), position(pos) {}
};

// Grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := INT | VAR | '(' expr ')' | factor '^' INT
// Whitespace-insensitive.  VAR must name a ring variable.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace fsplit

#endif
