#pragma once

#include <string>

#include "hardylab/lefun/calculus.hpp"

namespace hardylab::xcli {

// Parses the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' rational)?
//   atom   := 't' | number | '(' expr ')' | 'log' '(' expr ')'
//           | 'exp' '(' expr ')' | 'sqrt' '(' expr ')'
//   rational := integer ('/' positive-integer)?   (parentheses accepted)
//   number := decimal literal | 'pi' | 'e' | 'sqrt2'
// Returns the normalized function with inferred domain floor.
// Throws ParseError carrying the byte offset and the expected-token set.
lefun::LEFunction parse_lefun(const std::string& text);

// Parse to a raw expression without domain-floor inference.
lefun::Expr parse_expr(const std::string& text);

}  // namespace hardylab::xcli
