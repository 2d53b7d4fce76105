#ifndef BINEDGE_POLY_TEXT_HPP
#define BINEDGE_POLY_TEXT_HPP

#include <string>
#include <string_view>

#include "binedge/order.hpp"
#include "binedge/polynomial.hpp"

namespace binedge {

/// Parses the polynomial text format: sums of products of rational constants,
/// `x[i][j]`, auxiliary `t[k]`, `f[i,j]`, `minor[k,l|i,j]` and parenthesized
/// subexpressions, with `^` for nonnegative integer powers. Whitespace is
/// ignored. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingSpec& ring);

/// Canonical text: terms descending under `order`, e.g.
/// `x[1][1]*x[2][2] - x[1][2]*x[2][1]`.
std::string format_polynomial(const Polynomial& p, const MonomialOrder& order);
std::string format_polynomial(const Polynomial& p);
std::string format_monomial(const Monomial& m, const RingSpec& ring);

}  // namespace binedge

#endif  // BINEDGE_POLY_TEXT_HPP
