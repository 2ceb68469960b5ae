#pragma once

// Polynomial text grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := '(' expr ')' | variable | rational | 'i'
// Variables match [a-zA-Z][a-zA-Z0-9_]*, 'i' is the imaginary unit and is
// reserved. Rationals are 'p' or 'p/q' with nonzero q. The canonical
// printer (Poly::str) emits terms in descending degrevlex and its output
// parses back to the same polynomial.

#include "germlink/poly.hpp"

namespace germlink {

struct parse_error : error {
    size_t line, col;
    parse_error(const std::string& msg, size_t line_, size_t col_)
        : error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), col(col_) {}
};

// parse an expression; every identifier must be a variable of `ring`
Poly parse_poly(const std::string& text, const Ring& ring);

} // namespace germlink
