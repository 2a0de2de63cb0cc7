#pragma once

#include <span>
#include <string>
#include <string_view>

#include "dubois/polynomial.hpp"

namespace dubois {

/// Parses an integer polynomial expression.
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := int | ident | '(' expr ')'
///
/// Identifiers must match an entry of `variables` exactly; entry i becomes
/// variable position i. Errors are reported as ParseError with the byte
/// offset of the offending token.
Polynomial parse_poly(std::string_view text, std::span<const std::string> variables);

/// Canonical text form, leading (graded-lex largest) term first, e.g.
/// "x1*x2^2 - x3^2". Output parses back to the same polynomial.
std::string to_string(const Polynomial& f, std::span<const std::string> variables);
std::string to_string(const Polynomial& f);

std::string to_string(const Monomial& m, std::span<const std::string> variables);

}  // namespace dubois
