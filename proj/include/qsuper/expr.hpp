#pragma once

#include <stdexcept>
#include <string>

#include "qsuper/algebra.hpp"

namespace qsuper {

// Syntax or semantic error in an expression; position is a 0-based offset
// into the input.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position;
};

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*      '/' only by an invertible scalar
// unary  := '-' unary | power
// power  := atom ('^' exponent)*
// atom   := int | 'q' | 'E'idx | 'F'idx | 'K' '[' int (',' int)* ']' | '(' expr ')'
// Generator indices are 1-based; K takes one exponent per simple root. A
// negative power needs an invertible atom (a nonzero scalar times some K);
// a fractional exponent (a/b) is only allowed on q.
Element parse_expression(const Algebra& A, const std::string& text);
// Parses a coefficient; it must reduce to a multiple of 1.
Scalar parse_scalar(const Algebra& A, const std::string& text);

// Sum of terms coeff * F-word * K[..] * E-word in the monomial order. The
// output parses back to the same element.
std::string render(const Element& e);
std::string render_scalar(const Algebra& A, const Scalar& s);
// One monomial without coefficient, "1" for the unit.
std::string render_monomial(const Algebra& A, const Monomial& m);

}  // namespace qsuper
