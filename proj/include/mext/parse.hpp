#ifndef MEXT_PARSE_HPP
#define MEXT_PARSE_HPP

#include <cstddef>
#include <string>

#include "mext/poly.hpp"

namespace mext {

// Syntax error carrying the byte offset of the offending token.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

// Parse an expression over the context's variables.  Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ('-')* base ('^' nat)*
//   base   := rational | ident | '(' expr ')'
// Rational literals look like 7 or 7/2.  Implicit multiplication is a
// syntax error; whitespace is ignored.
Polynomial parse_polynomial(const std::string& s, const CtxPtr& ctx);

} // namespace mext

#endif
