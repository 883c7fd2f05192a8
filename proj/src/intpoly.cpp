#include "rri/intpoly.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <utility>

namespace rri {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& value) {
  std::vector<BigInt> c;
  if (sign_of(value) != 0) c.push_back(value);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(const BigInt& coeff, std::size_t exponent) {
  if (sign_of(coeff) == 0) return IntPoly();
  std::vector<BigInt> c(exponent + 1, BigInt(0));
  c[exponent] = coeff;
  return IntPoly(std::move(c));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sign_of(coeffs_.back()) == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t i) const {
  static const BigInt zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

const BigInt& IntPoly::leading() const {
  if (is_zero()) throw domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

const BigInt& IntPoly::constant_term() const {
  static const BigInt zero(0);
  return coeffs_.empty() ? zero : coeffs_.front();
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const BigInt& c = p.coeff(static_cast<std::size_t>(i));
    if (sign_of(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sign_of(c) < 0) out << "-";
      first = false;
    } else {
      out << (sign_of(c) < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i > 0) {
      if (mag != 1) out << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

long sign_variation(std::span<const BigInt> coeffs) {
  long count = 0;
  int prev = 0;
  for (const BigInt& c : coeffs) {
    int s = sign_of(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

long sign_variation(const IntPoly& p) {
  return sign_variation(std::span<const BigInt>(p.coeffs()));
}

bool has_sign_variation(const IntPoly& p) {
  int prev = 0;
  for (const BigInt& c : p.coeffs()) {
    int s = sign_of(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) return true;
    prev = s;
  }
  return false;
}

IntPoly taylor_shift_1(const IntPoly& p) {
  // In-place Pascal triangle: repeated a[j] += a[j+1] accumulates binomials.
  std::vector<BigInt> a = p.coeffs();
  const long n = p.degree();
  for (long i = 0; i < n; ++i)
    for (long j = n - 1; j >= i; --j) a[j] += a[j + 1];
  return IntPoly(std::move(a));
}

IntPoly reverse(const IntPoly& p) {
  if (p.is_zero()) throw domain_error("reverse of the zero polynomial");
  std::vector<BigInt> a = p.coeffs();
  std::reverse(a.begin(), a.end());
  return IntPoly(std::move(a));  // trailing zeros of p strip as leading zeros
}

IntPoly homothety_pow2(const IntPoly& p, unsigned long k) {
  std::vector<BigInt> a = p.coeffs();
  for (std::size_t i = 1; i < a.size(); ++i)
    mpz_mul_2exp(a[i].get_mpz_t(), a[i].get_mpz_t(), k * i);
  return IntPoly(std::move(a));
}

IntPoly shift_down(const IntPoly& p) {
  if (p.is_zero()) throw domain_error("shift_down of the zero polynomial");
  if (sign_of(p.constant_term()) != 0)
    throw domain_error("shift_down requires a zero constant term");
  std::vector<BigInt> a(p.coeffs().begin() + 1, p.coeffs().end());
  return IntPoly(std::move(a));
}

IntPoly reflect(const IntPoly& p) {
  std::vector<BigInt> a = p.coeffs();
  for (std::size_t i = 1; i < a.size(); i += 2) a[i] = -a[i];
  return IntPoly(std::move(a));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return IntPoly();
  std::vector<BigInt> a(p.coeffs().begin() + 1, p.coeffs().end());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= static_cast<long>(i + 1);
  return IntPoly(std::move(a));
}

int eval_sign(const IntPoly& p, const Rational& q) {
  if (p.is_zero()) return 0;
  // Horner scaled by den^deg keeps everything integral:
  //   acc <- acc * num + a_i * den^(deg - i)
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  const auto& a = p.coeffs();
  BigInt acc = a.back();
  BigInt den_pow(1);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc *= num;
    acc += a[i] * den_pow;
  }
  return sign_of(acc);
}

IntPoly add(const IntPoly& p, const IntPoly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return IntPoly(std::move(r));
}

IntPoly sub(const IntPoly& p, const IntPoly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return IntPoly(std::move(r));
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return IntPoly();
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sign_of(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return IntPoly(std::move(r));
}

IntPoly negate(const IntPoly& p) {
  std::vector<BigInt> a = p.coeffs();
  for (auto& c : a) c = -c;
  return IntPoly(std::move(a));
}

IntPoly poly_pow(const IntPoly& p, unsigned long e) {
  IntPoly result({1});
  IntPoly base = p;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw domain_error("exact_div: division by the zero polynomial");
  if (p.is_zero()) return IntPoly();
  if (p.degree() < q.degree())
    throw domain_error("exact_div: divisor degree exceeds dividend degree");
  std::vector<BigInt> rem = p.coeffs();
  const auto& b = q.coeffs();
  const BigInt& lead = q.leading();
  const long dq = q.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(p.degree() - dq) + 1, BigInt(0));
  for (long k = p.degree() - dq; k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + dq)];
    if (sign_of(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw domain_error("exact_div: division leaves a remainder");
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[static_cast<std::size_t>(k)] = c;
    for (long i = 0; i <= dq; ++i)
      rem[static_cast<std::size_t>(k + i)] -= c * b[static_cast<std::size_t>(i)];
  }
  for (const BigInt& c : rem)
    if (sign_of(c) != 0) throw domain_error("exact_div: division leaves a remainder");
  return IntPoly(std::move(quot));
}

BigInt content(const IntPoly& p) {
  BigInt g(0);
  for (const BigInt& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return IntPoly();
  BigInt g = content(p);
  if (g == 1) return p;
  std::vector<BigInt> a = p.coeffs();
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(a));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw domain_error("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree())
    throw domain_error("pseudo_remainder: divisor degree exceeds dividend degree");
  const long da = a.degree();
  const long db = b.degree();
  const BigInt& lb = b.leading();
  BigInt mult;
  mpz_pow_ui(mult.get_mpz_t(), lb.get_mpz_t(),
             static_cast<unsigned long>(da - db + 1));
  std::vector<BigInt> r = a.coeffs();
  for (auto& c : r) c *= mult;
  const auto& bc = b.coeffs();
  for (long k = da - db; k >= 0; --k) {
    BigInt& top = r[static_cast<std::size_t>(k + db)];
    if (sign_of(top) == 0) continue;
    // The premultiplication by lc(b)^(da-db+1) makes every step exact.
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw internal_error("pseudo_remainder: inexact elimination step");
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (long i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(k + i)] -= c * bc[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(db));
  return IntPoly(std::move(r));
}

namespace {

// --- modular square-freeness probe ----------------------------------------
// gcd(p, p') over Z/m with m prime and m not dividing lc(p) * deg(p) has
// degree at least deg(gcd(p, p')); a constant modular gcd therefore certifies
// that p is square-free without running the exact PRS.

std::uint64_t mulmod_u64(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> poly_mod(const IntPoly& p, std::uint64_t m) {
  std::vector<std::uint64_t> r(p.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = mpz_fdiv_ui(p.coeffs()[i].get_mpz_t(), m);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

long gcd_degree_mod(std::vector<std::uint64_t> f, std::vector<std::uint64_t> g,
                    std::uint64_t m) {
  auto strip = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  strip(f);
  strip(g);
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    // f <- f mod g by monic synthetic division
    std::uint64_t inv = powmod_u64(g.back(), m - 2, m);
    for (std::size_t shift = f.size() - g.size() + 1; shift-- > 0;) {
      std::uint64_t top = f[shift + g.size() - 1];
      if (top == 0) continue;
      std::uint64_t c = mulmod_u64(top, inv, m);
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::uint64_t t = mulmod_u64(c, g[i], m);
        std::uint64_t& fi = f[shift + i];
        fi = fi >= t ? fi - t : fi + m - t;
      }
    }
    f.resize(g.size() - 1);
    strip(f);
    std::swap(f, g);
  }
  return static_cast<long>(f.size()) - 1;
}

bool square_free_probe(const IntPoly& p) {
  // 63-bit primes; probe certifies only the square-free direction.
  static const std::array<std::uint64_t, 3> primes = {
      4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL};
  IntPoly d = derivative(p);
  if (d.is_zero()) return false;
  for (std::uint64_t m : primes) {
    if (mpz_fdiv_ui(p.leading().get_mpz_t(), m) == 0) continue;
    if (mpz_fdiv_ui(d.leading().get_mpz_t(), m) == 0) continue;
    std::vector<std::uint64_t> fm = poly_mod(p, m);
    std::vector<std::uint64_t> gm = poly_mod(d, m);
    if (static_cast<long>(fm.size()) - 1 != p.degree()) continue;
    if (gcd_degree_mod(std::move(fm), std::move(gm), m) == 0) return true;
  }
  return false;
}

}  // namespace

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero())
    throw domain_error("gcd of two zero polynomials");
  auto norm = [](IntPoly g) {
    g = primitive_part(g);
    if (sign_of(g.leading()) < 0) g = negate(g);
    return g;
  };
  if (p.is_zero()) return norm(q);
  if (q.is_zero()) return norm(p);
  IntPoly g = primitive_part(p);
  IntPoly h = primitive_part(q);
  if (g.degree() < h.degree()) std::swap(g, h);
  while (!h.is_zero()) {
    IntPoly r = pseudo_remainder(g, h);
    g = std::move(h);
    h = primitive_part(r);
  }
  return norm(g);
}

bool is_square_free(const IntPoly& p) {
  if (p.is_zero()) throw domain_error("is_square_free: zero polynomial");
  if (p.degree() <= 1) return true;
  if (square_free_probe(p)) return true;
  return gcd(p, derivative(p)).degree() == 0;
}

IntPoly square_free_part(const IntPoly& p) {
  if (p.is_zero()) throw domain_error("square_free_part: zero polynomial");
  if (p.degree() < 1) throw domain_error("square_free_part: constant polynomial");
  if (p.degree() == 1) return p;
  if (square_free_probe(p)) return p;
  IntPoly g = gcd(p, derivative(p));
  if (g.degree() == 0) return p;
  return exact_div(p, g);
}

}  // namespace rri
