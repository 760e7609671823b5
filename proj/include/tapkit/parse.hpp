#pragma once

// Exact parsing of polynomial expressions such as "u^3 + u^2 + 2*u + 1",
// "t^-1 - 1" or "(4+a^2)*t^2 - 4*t + (4+a^2)".

#include <map>
#include <string>
#include <vector>

#include "tapkit/knotgroup.hpp"
#include "tapkit/laurent.hpp"
#include "tapkit/numfield.hpp"

namespace tapkit {

// Sparse polynomial in named variables with rational coefficients; exponent
// vectors are indexed like `vars`.
struct ParsedPoly {
  std::vector<std::string> vars;
  std::map<std::vector<int>, Rat> terms;
};

// Grammar: sums of products of factors; a factor is a number (integer or
// a/b), an identifier, or a parenthesized expression, optionally followed by
// ^ and a (possibly negative) integer. Juxtaposition such as "2t" multiplies.
// Negative exponents are only allowed on single variables.
ParsedPoly parse_polynomial(const std::string& text);

// At most one variable (any name).
QLaurent parse_laurent(const std::string& text);
ZLaurent parse_integer_laurent(const std::string& text);
// At most one variable, nonnegative exponents, integer coefficients.
ZPoly parse_integer_poly(const std::string& text);
// Variables t and the field generator (default name "a"); exponents of the
// generator must be nonnegative.
LPoly parse_nf_laurent(const std::string& text, const FieldPtr& field, const std::string& gen = "a");
NFElem parse_nf_element(const std::string& text, const FieldPtr& field, const std::string& gen = "a");

// Formatting, highest degree first.
std::string format_laurent(const ZLaurent& f, const std::string& var = "t");
std::string format_laurent(const QLaurent& f, const std::string& var = "t");
std::string format_laurent(const LPoly& f, const std::string& var = "t", const std::string& gen = "a");
std::string format_poly(const ZPoly& f, const std::string& var);

}  // namespace tapkit
