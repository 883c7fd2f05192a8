#pragma once

#include <vector>

#include "rri/intpoly.hpp"
#include "rri/vas.hpp"

namespace rri {

/* Sturm sequence: p, p', then negated primitive pseudo-remainders with the
 * sign of the pseudo-division multiplier corrected, down to a constant. */
struct SturmChain {
  std::vector<IntPoly> polys;
};

SturmChain sturm_chain(const IntPoly& p);

/* Sign changes of the chain evaluated at x (zeros skipped). */
long chain_sign_variation_at(const SturmChain& chain, const Rational& x);

/* Number of distinct real roots of p in (a, b). Requires a < b and p
 * nonvanishing at both endpoints. */
long sturm_count(const SturmChain& chain, const Rational& a, const Rational& b);
long sturm_count(const IntPoly& p, const Rational& a, const Rational& b);

/* Independent root isolation by Sturm counts and interval bisection, used to
 * cross-check the continued-fraction engine. Same output contract as
 * isolate(). */
std::vector<RootInterval> oracle_isolate(const IntPoly& p);

/* Do two isolation outputs describe the same real roots of the square-free
 * polynomial f? Exact points must agree exactly; an exact point matches an
 * open interval containing it; two open intervals must overlap and their hull
 * must contain exactly one root. */
bool same_roots(const IntPoly& f, const std::vector<RootInterval>& lhs,
                const std::vector<RootInterval>& rhs);

}  // namespace rri
