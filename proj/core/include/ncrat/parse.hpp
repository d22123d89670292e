#pragma once

#include <string_view>

#include "ncrat/magnus.hpp"

namespace ncrat {

/// Grammar (whitespace insignificant):
///   expr   := term (('+' | '-') term)*
///   term   := ['-'] factor ('*' factor)*
///   factor := primary ('^-1')*
///   primary:= integer | symbol | 'x'<digits> | '(' expr ')'
/// Coefficient symbols come from `spec`, indeterminates are x1..x_mu.
/// Throws SyntaxError (with position) and UnknownSymbol.
RationalExpr parse_expr(std::string_view src, const SpecPtr& spec, unsigned mu);

/// Group ring syntax: same operators without inversion of sums; a factor is
/// an integer, a coefficient symbol, a letter z<i> with optional '^k' or
/// '^-k', or a parenthesized expression. Juxtaposition multiplies.
GroupRingElement parse_group_ring(std::string_view src, const SpecPtr& spec, unsigned mu);

} // namespace ncrat
