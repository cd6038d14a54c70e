#pragma once

#include <string_view>

#include "scalelab/jet.hpp"

namespace scalelab {

// Core-function language:
//
//   program   := statement ((';' | newline) statement)*
//   statement := sum
//   sum       := product (('+' | '-') product)*
//   product   := unary (('*' | '/') unary)*
//   unary     := ('-' | '+') unary | power
//   power     := primary ('^' integer)?
//   primary   := number | jet | '(' sum ')'
//   jet       := 'u' digits ('_' ('x' digits | 't' | 'eta')+)?
//
// Each statement is one component of the expression, so the number of statements fixes
// N and u1..uN are the admissible unknowns. Numbers are integers or decimals and are
// kept exact. Division is only by nonzero constants. Errors carry "line L, column C".

/// Parses an expression over n spatial dimensions. Eta-derivative suffixes are accepted
/// only when `allow_eta` is set.
JetExpr parse_expr(std::string_view text, int n, bool allow_eta);

/// Parses a core function: eta-derivatives are rejected.
JetExpr parse_core(std::string_view text, int n);

}  // namespace scalelab
