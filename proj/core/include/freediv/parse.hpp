#pragma once

#include <functional>
#include <optional>
#include <string>

#include "freediv/poly.hpp"

namespace freediv {

// Resolves identifiers that are not ring variables (e.g. named polynomials).
using PolyLookup = std::function<std::optional<Poly>(const std::string&)>;

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*      division only by nonzero constants
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' digits)?
//   atom   := digits | identifier | '(' expr ')'
// Whitespace is ignored. Positions in errors are offset by (line, column).
Poly parse_poly(const std::string& text, const RingPtr& ring, const PolyLookup& lookup = {},
                int line = 1, int column = 1);

}  // namespace freediv
