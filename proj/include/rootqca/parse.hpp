#pragma once

// Text forms for scalars and torus elements.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor | '/' integer)*
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | 'z' | 'x' index | '(' expr ')'
//
// Factors multiply in the torus in written order, so "x1*x2" and "x2*x1"
// differ by a power of z.

#include <stdexcept>
#include <string>

#include "rootqca/torus.hpp"

namespace rootqca {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position;
};

TorusElement parse_element(const std::string& text, const QuantumTorus& torus);
CycRat parse_scalar(const std::string& text, const CycContextPtr& ctx);

/// Inverse of parse_element: each term is printed as a scalar times the
/// ordered product x1^f1*...*xN^fN.
std::string format_element(const TorusElement& a, const Bicharacter& lambda);

}  // namespace rootqca
