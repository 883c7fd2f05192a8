#include "rri/bounds.hpp"

#include <algorithm>
#include <vector>

namespace rri {

namespace {

IntPoly with_positive_leading(const IntPoly& p) {
  if (p.is_zero()) throw domain_error("positive-root bound on the zero polynomial");
  return sign_of(p.leading()) > 0 ? p : negate(p);
}

// After leading-sign normalization a sign variation means some coefficient is
// negative, which is exactly what the greedy matchers need.
void require_mixed_signs(const IntPoly& p) {
  if (!has_sign_variation(p))
    throw domain_error("positive-root bound requires a sign variation");
}

}  // namespace

bool certificate_holds(const IntPoly& p, const Rational& u) {
  if (sign_of(u) < 0) throw domain_error("certificate_holds: u must be nonnegative");
  IntPoly q = with_positive_leading(p);
  const auto& a = q.coeffs();
  Rational acc(0);
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = acc * u + Rational(a[i]);
    if (sign_of(acc) < 0) return false;
  }
  return true;
}

bool less_than_one(const IntPoly& p) {
  IntPoly q = with_positive_leading(p);
  require_mixed_signs(q);
  const auto& a = q.coeffs();
  const long n = q.degree();
  long last_neg = 0;
  while (sign_of(a[static_cast<std::size_t>(last_neg)]) >= 0) ++last_neg;
  long start = n - 1;
  while (sign_of(a[static_cast<std::size_t>(start)]) >= 0) --start;

  // Pay each negative coefficient (high to low) out of the positive
  // coefficients above the most recently paid one.
  BigInt cf_sum = a[static_cast<std::size_t>(n)];
  long i = n - 1;
  long j = start;
  long last = start;
  while (i >= last_neg - 1 && j >= last_neg - 1) {
    if (sign_of(cf_sum) < 0) {
      while (i > last && sign_of(a[static_cast<std::size_t>(i)]) <= 0) --i;
      if (i == last) return false;
      cf_sum += a[static_cast<std::size_t>(i)];
      --i;
    } else {
      if (j == last_neg - 1) return true;
      while (j >= last_neg && sign_of(a[static_cast<std::size_t>(j)]) >= 0) --j;
      cf_sum += a[static_cast<std::size_t>(j)];  // a_j < 0
      last = j;
      --j;
    }
  }
  return true;
}

Rational up_bound(const IntPoly& p, UpBoundStats* stats) {
  IntPoly q = with_positive_leading(p);
  require_mixed_signs(q);
  if (stats) *stats = UpBoundStats{};
  if (!less_than_one(q)) return Rational(2);  // sentinel: no certificate at 1

  const auto& a = q.coeffs();
  const long n = q.degree();
  long last_neg = 0;
  while (sign_of(a[static_cast<std::size_t>(last_neg)]) >= 0) ++last_neg;
  long start = n - 1;
  while (sign_of(a[static_cast<std::size_t>(start)]) >= 0) --start;

  // Same greedy with coefficient i weighted by 2^((n-i)*base): a pass decides
  // the certificate at u = 1/2^base. Double the base until it fails.
  unsigned long base = 1;
  while (true) {
    long touches = 0;
    bool passed = false;
    long i = n - 1;
    long j = start;
    BigInt cf_sum = a[static_cast<std::size_t>(n)];
    while (i >= last_neg - 1 && j >= last_neg - 1) {
      if (sign_of(cf_sum) < 0) {
        while (i > j && sign_of(a[static_cast<std::size_t>(i)]) <= 0) {
          --i;
          ++touches;
        }
        if (i == j) break;  // deficit not coverable: certificate fails
        BigInt w = a[static_cast<std::size_t>(i)];
        w <<= static_cast<unsigned long>(n - i) * base;
        cf_sum += w;
        ++touches;
        --i;
      } else {
        if (j == last_neg - 1) {
          passed = true;
          break;
        }
        while (j >= last_neg && sign_of(a[static_cast<std::size_t>(j)]) >= 0) {
          --j;
          ++touches;
        }
        BigInt w = a[static_cast<std::size_t>(j)];  // a_j < 0
        w <<= static_cast<unsigned long>(n - j) * base;
        cf_sum += w;
        ++touches;
        --j;
      }
    }
    if (stats) {
      ++stats->passes;
      stats->max_touches_in_pass = std::max(stats->max_touches_in_pass, touches);
    }
    if (!passed) return rational_pow2(-(static_cast<long>(base) - 1));
    ++base;
  }
}

BoundResult lower_bound(const IntPoly& p) {
  if (p.is_zero()) throw domain_error("lower_bound: zero polynomial");
  if (!has_sign_variation(p))
    throw domain_error("lower_bound: no sign variation");
  Rational v = up_bound(reverse(p));
  BoundResult out;
  if (v > 1) {
    out.kind = BoundKind::uncertified;
    out.value = make_rational(1, 2);  // marker only: "possibly below 1"
  } else {
    out.kind = BoundKind::certified;
    out.value = Rational(1) / v;  // 2^(b-1) >= 1
  }
  return out;
}

Rational cauchy_bound(const IntPoly& p) {
  if (p.degree() < 1) throw domain_error("cauchy_bound: need degree >= 1");
  const auto& a = p.coeffs();
  BigInt max_abs(0);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    BigInt m = abs(a[i]);
    if (m > max_abs) max_abs = m;
  }
  Rational r = make_rational(max_abs, abs(p.leading()));
  return r + 1;
}

Rational asv_bound(const IntPoly& p) {
  IntPoly q = with_positive_leading(p);
  require_mixed_signs(q);
  const auto& a = q.coeffs();
  const long n = q.degree();

  std::vector<long> pos_exps;  // ascending
  for (long e = 0; e <= n; ++e)
    if (sign_of(a[static_cast<std::size_t>(e)]) > 0) pos_exps.push_back(e);

  // Nearest positive exponent strictly above each negative one; count how
  // many negatives each positive serves so its coefficient splits evenly.
  auto partner_of = [&](long e) {
    auto it = std::upper_bound(pos_exps.begin(), pos_exps.end(), e);
    return *it;  // a_n > 0 guarantees existence
  };
  std::vector<long> share(static_cast<std::size_t>(n) + 1, 0);
  for (long e = n - 1; e >= 0; --e)
    if (sign_of(a[static_cast<std::size_t>(e)]) < 0)
      ++share[static_cast<std::size_t>(partner_of(e))];

  Rational best(0);
  for (long e = n - 1; e >= 0; --e) {
    if (sign_of(a[static_cast<std::size_t>(e)]) >= 0) continue;
    const long pe = partner_of(e);
    const long delta = pe - e;
    // ratio = |a_e| / (a_pe / share): smallest t with 2^(t*delta) >= ratio
    Rational ratio = make_rational(
        abs(a[static_cast<std::size_t>(e)]) * share[static_cast<std::size_t>(pe)],
        a[static_cast<std::size_t>(pe)]);
    long est = static_cast<long>(mpz_sizeinbase(ratio.get_num().get_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(ratio.get_den().get_mpz_t(), 2));
    long t = est / delta - 2;
    while (rational_pow2(t * delta) < ratio) ++t;
    while (rational_pow2((t - 1) * delta) >= ratio) --t;
    Rational candidate = rational_pow2(t);
    if (candidate > best) best = candidate;
  }
  return best;
}

}  // namespace rri
