#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rri/errors.hpp"
#include "rri/numeric.hpp"

namespace rri {

/* Dense univariate polynomial over arbitrary-precision integers.
 * coeff(i) is the coefficient of x^i (low-to-high storage). Nonzero
 * polynomials keep a nonzero leading coefficient; the zero polynomial has an
 * empty coefficient vector and degree -1. */
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);  // low-to-high, for literals

  static IntPoly constant(const BigInt& value);
  static IntPoly monomial(const BigInt& coeff, std::size_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(std::size_t i) const;  // 0 above the degree
  const BigInt& leading() const;             // error on the zero polynomial
  const BigInt& constant_term() const;       // 0 for the zero polynomial

  bool operator==(const IntPoly&) const = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

std::string to_string(const IntPoly& p);

/* Number of sign changes in the coefficient sequence, zeros skipped. */
long sign_variation(std::span<const BigInt> coeffs);
long sign_variation(const IntPoly& p);
bool has_sign_variation(const IntPoly& p);  // sign_variation(p) > 0, one scan

/* Transforms. */
IntPoly taylor_shift_1(const IntPoly& p);                   // p(x+1)
IntPoly reverse(const IntPoly& p);                          // x^deg(p) * p(1/x)
IntPoly homothety_pow2(const IntPoly& p, unsigned long k);  // p(2^k * x)
IntPoly shift_down(const IntPoly& p);                       // p/x, needs p(0)=0
IntPoly reflect(const IntPoly& p);                          // p(-x)
IntPoly derivative(const IntPoly& p);

/* Exact sign of p(q) at a rational point. */
int eval_sign(const IntPoly& p, const Rational& q);

/* Ring operations. */
IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly negate(const IntPoly& p);
IntPoly poly_pow(const IntPoly& p, unsigned long e);
/* Exact quotient; errors when q does not divide p over the integers. */
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) { return add(p, q); }
inline IntPoly operator-(const IntPoly& p, const IntPoly& q) { return sub(p, q); }
inline IntPoly operator*(const IntPoly& p, const IntPoly& q) { return mul(p, q); }
inline IntPoly operator-(const IntPoly& p) { return negate(p); }

/* Content / gcd machinery (primitive pseudo-remainder sequence). */
BigInt content(const IntPoly& p);        // nonnegative; 0 for the zero poly
IntPoly primitive_part(const IntPoly& p);
/* lc(b)^(deg a - deg b + 1) * a  mod  b; requires deg a >= deg b, b nonzero. */
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
IntPoly gcd(const IntPoly& p, const IntPoly& q);  // primitive, positive leading
bool is_square_free(const IntPoly& p);
/* p / gcd(p, p'); keeps the sign of the leading coefficient of p. */
IntPoly square_free_part(const IntPoly& p);

}  // namespace rri
