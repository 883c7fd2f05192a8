#pragma once

#include <utility>
#include <vector>

#include "rri/bounds.hpp"
#include "rri/intpoly.hpp"

namespace rri {

/* Coefficients of the map x -> (a x + b) / (c x + d) that carries the current
 * subtree's (0, inf) domain back to an interval of the original variable. */
struct Mobius {
  BigInt a, b, c, d;
};

enum class IntervalKind { exact, open };

/* Either an exact rational root (kind exact, lo == hi) or an open interval
 * (lo, hi) containing exactly one real root. */
struct RootInterval {
  IntervalKind kind = IntervalKind::exact;
  Rational lo, hi;

  static RootInterval exact_point(Rational r);
  static RootInterval open(Rational lo, Rational hi);
  bool operator==(const RootInterval&) const = default;
};

/* Strict weak order: by lower endpoint, exact points before open intervals. */
bool interval_less(const RootInterval& x, const RootInterval& y);

struct IsolateOptions {
  bool use_substitution = true;  // route x = y^k through the compressed poly
  bool use_early_split = true;   // V(P)==2 one-evaluation split shortcut
  bool paranoid = false;         // recompute V for unexpanded emissions
};

struct IsolateStats {
  long nodes = 0;
  long taylor_shifts = 0;
  long exact_roots = 0;
  long budget_one_emissions = 0;  // intervals emitted without expanding a child
  long early_split_hits = 0;
  long paranoid_checked = 0;
  long paranoid_violations = 0;
};

/* Map the (0, inf) domain of a Mobius node to a root interval: both images
 * finite -> the open interval between them; one image infinite -> the open
 * interval from the finite image up to cap (a certified root bound). */
RootInterval intvl(const BigInt& a, const BigInt& b, const BigInt& c,
                   const BigInt& d, const Rational& cap);

enum class EarlySplit { split_certain, root_at_one, inconclusive };

/* For V(P) == 2: one evaluation at 1 decides whether the split at 1 is
 * guaranteed to separate the two roots (sign opposite to the leading
 * coefficient), hits a root at 1, or decides nothing. */
EarlySplit early_split_check(const IntPoly& p);

/* Largest k with P(x) = P1(x^k); returns (P1, k), k = 1 when no compression
 * applies. */
std::pair<IntPoly, unsigned long> detect_power_substitution(const IntPoly& p);

/* Translate isolating intervals for the roots of P1 (where P(x) = P1(x^k))
 * into isolating intervals for the roots of P. */
std::vector<RootInterval> map_back_roots(const std::vector<RootInterval>& yroots,
                                         unsigned long k, const IntPoly& p);

/* Isolate the positive real roots of a square-free F with F(0) != 0 by
 * continued-fraction (Mobius) subdivision driven by certified power-of-two
 * lower bounds and Descartes budgets. */
std::vector<RootInterval> cf_positive(const IntPoly& f,
                                      const IsolateOptions& opts = {},
                                      IsolateStats* stats = nullptr);

/* Isolate all real roots of a nonzero integer polynomial: square-free
 * reduction, exact handling of the root at 0, positive roots directly and
 * negative roots through P(-x). Output is sorted and pairwise disjoint, open
 * interval endpoints are never roots. */
std::vector<RootInterval> isolate(const IntPoly& p,
                                  const IsolateOptions& opts = {},
                                  IsolateStats* stats = nullptr);

}  // namespace rri
