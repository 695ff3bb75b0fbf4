#pragma once

// Text syntax for elements of H*(BV^{2r}; F_p):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := coeff | gen | '(' expr ')'
//   gen    := ('a' | 'b' | 'x' | 'y') uint
//   coeff  := uint
//
// Whitespace is ignored; x_i and y_i stand for ξ_i and η_i. A leading '-' is
// also accepted. Integer literals at or above p are reduced mod p.

#include <string_view>

#include "steenrodlab/graded.hpp"

namespace steenrodlab {

// Throws ParseError (with line/column) on malformed input and Error(Parameter)
// when a generator index falls outside [1, r].
GradedElement parse_expression(std::string_view text, AlgebraParams params);

}  // namespace steenrodlab
