#pragma once

#include "rri/intpoly.hpp"

namespace rri {

enum class BoundKind { certified, uncertified };

/* Outcome of a positive-root lower bound computation. */
struct BoundResult {
  BoundKind kind = BoundKind::uncertified;
  Rational value;  // certified: the bound (>= 1); uncertified: 1/2 marker
  bool certified() const { return kind == BoundKind::certified; }
};

/* True iff every suffix Horner sum of P at u is nonnegative, after the
 * leading coefficient is normalized to be positive. A true result certifies
 * u as an upper bound on the positive roots of P; the predicate is monotone
 * in u. Requires u >= 0 and P nonzero. */
bool certificate_holds(const IntPoly& p, const Rational& u);

/* True iff 1 certifiably bounds the positive roots of P (certificate at 1),
 * decided by a greedy match of positive coefficient mass against negative
 * coefficient mass from the high end. Requires a sign variation. */
bool less_than_one(const IntPoly& p);

struct UpBoundStats {
  long passes = 0;               // weighted greedy passes executed
  long max_touches_in_pass = 0;  // coefficient inspections in the worst pass
};

/* Upper bound on the positive roots of P: either 1/2^(b-1) <= 1 obtained by
 * doubling the weight base until the certificate fails, or the sentinel 2
 * when not even 1 is certified. Requires a sign variation. */
Rational up_bound(const IntPoly& p, UpBoundStats* stats = nullptr);

/* Certified power-of-two lower bound (>= 1) on the positive roots of P,
 * obtained as the reciprocal of up_bound on the reversed polynomial, or an
 * uncertified marker when the reciprocal bound is below 1. */
BoundResult lower_bound(const IntPoly& p);

/* 1 + max(|a_i|, i < n) / |a_n|; bounds the absolute value of every root
 * strictly. Requires deg(p) >= 1. */
Rational cauchy_bound(const IntPoly& p);

/* Power-of-two upper bound on the positive roots built by pairing each
 * negative term with the nearest positive term of larger exponent, splitting
 * each positive coefficient evenly among its assigned negatives, and taking
 * the max over pairs of (portion ratio)^(1/exponent gap) rounded up to a
 * power of two. Requires a negative term below a positive one. */
Rational asv_bound(const IntPoly& p);

}  // namespace rri
