#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rri/intpoly.hpp"
#include "rri/vas.hpp"

namespace rri {

/* Polynomial text formats:
 *   expr    arithmetic over integer literals and x: + - * ^, parentheses,
 *           unary minus; ^ binds tighter than unary minus, * requires an
 *           explicit operator, ^ is right-associative with integer exponents
 *   coeffs  whitespace/comma-separated integers, low-to-high
 *   sparse  whitespace-separated exponent:coefficient pairs
 */
enum class PolyFormat { expr, coeffs, sparse };

struct PolySource {
  PolyFormat format = PolyFormat::expr;
  std::string payload;
};

IntPoly parse_expression(std::string_view text);
IntPoly parse_coeffs(std::string_view text);
IntPoly parse_sparse(std::string_view text);
IntPoly parse_poly(const PolySource& src);

/* Canonical renderings; parse(format(p)) == p in every format. */
std::string format_expression(const IntPoly& p);
std::string format_coeffs(const IntPoly& p);
std::string format_sparse(const IntPoly& p);
std::string format_poly(const IntPoly& p, PolyFormat format);

enum class OutputMode { human, json };

std::string format_rational(const Rational& q);  // "num/den", always explicit

/* human: one "[lo, hi]" (exact) or "(lo, hi)" (open) per line; empty input
 * gives an empty string. json: array of {kind, lo:{num,den}, hi:{num,den}}
 * with num/den as decimal strings. */
std::string format_results(const std::vector<RootInterval>& results,
                           OutputMode mode);

/* Inverse of the json rendering; exact round-trip. */
std::vector<RootInterval> parse_results_json(const std::string& text);

}  // namespace rri
