#pragma once

#include <gmpxx.h>

#include "rri/errors.hpp"

namespace rri {

using BigInt = mpz_class;
using Rational = mpq_class;

inline int sign_of(const BigInt& x) { return sgn(x); }
inline int sign_of(const Rational& x) { return sgn(x); }

/* 2^k as an integer, k >= 0. */
inline BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

/* 2^k as a rational; k may be negative. */
inline Rational rational_pow2(long k) {
  if (k >= 0) return Rational(pow2(static_cast<unsigned long>(k)));
  Rational r(1, pow2(static_cast<unsigned long>(-k)));
  r.canonicalize();
  return r;
}

/* num/den reduced with den > 0. */
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sign_of(den) == 0) throw domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/* The exponent k of a value that is exactly 2^k (k may be negative). */
inline long pow2_exponent(const Rational& v) {
  const BigInt num = v.get_num();
  const BigInt den = v.get_den();
  auto is_p2 = [](const BigInt& z) {
    return sgn(z) > 0 && mpz_popcount(z.get_mpz_t()) == 1;
  };
  if (den == 1 && is_p2(num))
    return static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - 1;
  if (num == 1 && is_p2(den))
    return -(static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1);
  throw domain_error("pow2_exponent: value is not a power of two");
}

/* Floor of the k-th root of x >= 0; sets *exact when x is a perfect power. */
inline BigInt kth_root_floor(const BigInt& x, unsigned long k, bool* exact = nullptr) {
  if (sign_of(x) < 0) throw domain_error("kth_root_floor: negative argument");
  if (k == 0) throw domain_error("kth_root_floor: k must be positive");
  BigInt r;
  int ex = mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  if (exact) *exact = (ex != 0);
  return r;
}

/* q^k for k >= 0. */
inline Rational rational_pow(const Rational& q, unsigned long k) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), q.get_den().get_mpz_t(), k);
  return make_rational(n, d);
}

}  // namespace rri
