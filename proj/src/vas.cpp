#include "rri/vas.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace rri {

RootInterval RootInterval::exact_point(Rational r) {
  RootInterval iv;
  iv.kind = IntervalKind::exact;
  iv.lo = r;
  iv.hi = std::move(r);
  return iv;
}

RootInterval RootInterval::open(Rational lo, Rational hi) {
  RootInterval iv;
  iv.kind = IntervalKind::open;
  iv.lo = std::move(lo);
  iv.hi = std::move(hi);
  return iv;
}

bool interval_less(const RootInterval& x, const RootInterval& y) {
  int c = cmp(x.lo, y.lo);
  if (c != 0) return c < 0;
  if (x.kind != y.kind) return x.kind == IntervalKind::exact;
  return x.hi < y.hi;
}

RootInterval intvl(const BigInt& a, const BigInt& b, const BigInt& c,
                   const BigInt& d, const Rational& cap) {
  if (sign_of(a) < 0 || sign_of(b) < 0 || sign_of(c) < 0 || sign_of(d) < 0)
    throw domain_error("intvl: negative Mobius entry");
  if (sign_of(a) == 0 && sign_of(b) == 0)
    throw domain_error("intvl: a and b both zero");
  if (sign_of(c) == 0 && sign_of(d) == 0)
    throw domain_error("intvl: c and d both zero");
  if (sign_of(cap) <= 0) throw domain_error("intvl: cap must be positive");
  if (sign_of(c) != 0 && sign_of(d) != 0) {
    Rational x = make_rational(a, c);
    Rational y = make_rational(b, d);
    int s = cmp(x, y);
    if (s == 0) throw internal_error("intvl: degenerate Mobius map");
    return s < 0 ? RootInterval::open(x, y) : RootInterval::open(y, x);
  }
  // One endpoint image is infinite: the other one is the finite edge and the
  // certified root bound caps the interval.
  Rational finite =
      sign_of(c) == 0 ? make_rational(b, d) : make_rational(a, c);
  if (finite >= cap)
    throw internal_error("intvl: finite endpoint not below cap");
  return RootInterval::open(finite, cap);
}

EarlySplit early_split_check(const IntPoly& p) {
  if (sign_variation(p) != 2)
    throw domain_error("early_split_check: sign variation must be 2");
  BigInt at_one(0);
  for (const BigInt& c : p.coeffs()) at_one += c;
  int s = sign_of(at_one);
  if (s == 0) return EarlySplit::root_at_one;
  return s != sign_of(p.leading()) ? EarlySplit::split_certain
                                   : EarlySplit::inconclusive;
}

std::pair<IntPoly, unsigned long> detect_power_substitution(const IntPoly& p) {
  if (p.is_zero())
    throw domain_error("detect_power_substitution: zero polynomial");
  unsigned long g = 0;
  for (long e = p.degree(); e >= 0; --e) {
    if (sign_of(p.coeff(static_cast<std::size_t>(e))) == 0) continue;
    g = std::gcd(g, static_cast<unsigned long>(e));
    if (g == 1) break;
  }
  if (g <= 1) return {p, 1};
  std::vector<BigInt> compressed(static_cast<std::size_t>(p.degree()) / g + 1,
                                 BigInt(0));
  for (long e = 0; e <= p.degree(); ++e)
    if (sign_of(p.coeff(static_cast<std::size_t>(e))) != 0)
      compressed[static_cast<std::size_t>(e) / g] =
          p.coeff(static_cast<std::size_t>(e));
  return {IntPoly(std::move(compressed)), g};
}

namespace {

// Divide out the rational root num/den (linear factor den*x - num); exact by
// the rational root theorem.
IntPoly strip_rational_root(const IntPoly& f, const Rational& r) {
  IntPoly lin(std::vector<BigInt>{-r.get_num(), r.get_den()});
  return exact_div(f, lin);
}

// f has exactly one root in the open interval (lo, hi); return the same root
// bracketed by non-roots of f (or as an exact point when a probe hits it).
// hi can be an extremely loose bound (the Cauchy cap), so the root is first
// approached from lo by doubling steps; bisecting (lo, hi) directly would
// evaluate f at cap-sized points.
RootInterval refine_open(const IntPoly& f, Rational lo, Rational hi) {
  IntPoly g = f;
  if (eval_sign(g, lo) == 0) g = strip_rational_root(g, lo);
  if (eval_sign(g, hi) == 0) g = strip_rational_root(g, hi);
  const int s_lo = eval_sign(g, lo);

  Rational step(1);
  while (lo + step < hi) {
    Rational mid = lo + step;
    int s_mid = eval_sign(g, mid);
    if (s_mid == 0) return RootInterval::exact_point(mid);
    if (s_mid != s_lo) {
      hi = std::move(mid);
      break;
    }
    lo = std::move(mid);
    step *= 2;
  }

  while (eval_sign(f, lo) == 0 || eval_sign(f, hi) == 0) {
    Rational mid = (lo + hi) / 2;
    int s_mid = eval_sign(g, mid);
    if (s_mid == 0) return RootInterval::exact_point(mid);
    if (s_mid != s_lo)
      hi = std::move(mid);
    else
      lo = std::move(mid);
  }
  return RootInterval::open(std::move(lo), std::move(hi));
}

struct CFNode {
  Mobius m;
  IntPoly p;
  long budget;  // >= V(p), same parity
};

}  // namespace

std::vector<RootInterval> cf_positive(const IntPoly& f,
                                      const IsolateOptions& opts,
                                      IsolateStats* stats) {
  if (f.is_zero()) throw domain_error("cf_positive: zero polynomial");
  if (f.degree() >= 1 && sign_of(f.constant_term()) == 0)
    throw domain_error("cf_positive: nonzero constant term required");
  if (f.degree() >= 2 && !is_square_free(f))
    throw domain_error("cf_positive: square-free polynomial required");

  std::vector<RootInterval> out;
  if (f.degree() < 1) return out;
  long s0 = sign_variation(f);
  if (s0 == 0) return out;
  const Rational cap = cauchy_bound(f);

  IsolateStats fallback;
  IsolateStats& st = stats ? *stats : fallback;

  std::vector<RootInterval> raw_open;
  auto emit_exact = [&](const BigInt& num, const BigInt& den) {
    out.push_back(RootInterval::exact_point(make_rational(num, den)));
    ++st.exact_roots;
  };

  std::vector<CFNode> work;
  work.push_back({{BigInt(1), BigInt(0), BigInt(0), BigInt(1)}, f, s0});

  while (!work.empty()) {
    CFNode node = std::move(work.back());
    work.pop_back();
    ++st.nodes;
    BigInt a = std::move(node.m.a);
    BigInt b = std::move(node.m.b);
    BigInt c = std::move(node.m.c);
    BigInt d = std::move(node.m.d);
    IntPoly p = std::move(node.p);
    long s = node.budget;

    // Stale budgets can reach a variation-free node; no positive roots there.
    if (!has_sign_variation(p)) continue;

    bool fresh_variation = false;
    BoundResult alpha = lower_bound(p);
    if (alpha.certified()) {
      // Certified: all positive roots lie above alpha = 2^k >= 1. Rescale so
      // they lie above 1, then shift by 1 and handle a root landing on it.
      long k = pow2_exponent(alpha.value);
      if (k > 0) {
        p = homothety_pow2(p, static_cast<unsigned long>(k));
        a <<= static_cast<unsigned long>(k);
        c <<= static_cast<unsigned long>(k);
      }
      p = taylor_shift_1(p);
      ++st.taylor_shifts;
      b += a;
      d += c;
      if (sign_of(p.constant_term()) == 0) {
        emit_exact(b, d);
        p = shift_down(p);
      }
      s = sign_variation(p);
      fresh_variation = true;
      if (s == 0) continue;
      if (s == 1) {
        raw_open.push_back(intvl(a, b, c, d, cap));
        continue;
      }
    }

    // Split the (0, inf) domain at 1.
    if (opts.use_early_split) {
      long v = fresh_variation ? s : sign_variation(p);
      if (v == 2) {
        EarlySplit es = early_split_check(p);
        if (es == EarlySplit::split_certain) {
          // One sign flip at 1 separates the two remaining roots; emit both
          // children without expanding either polynomial.
          ++st.early_split_hits;
          st.budget_one_emissions += 2;
          if (opts.paranoid) {
            st.paranoid_checked += 2;
            st.taylor_shifts += 2;
            if (sign_variation(taylor_shift_1(p)) != 1) ++st.paranoid_violations;
            if (sign_variation(taylor_shift_1(reverse(p))) != 1)
              ++st.paranoid_violations;
          }
          raw_open.push_back(intvl(a, a + b, c, c + d, cap));  // (1, inf) side
          raw_open.push_back(intvl(b, a + b, d, c + d, cap));  // (0, 1) side
          continue;
        }
        // root_at_one: the regular split records it; inconclusive: fall back.
      }
    }

    IntPoly p1 = taylor_shift_1(p);
    ++st.taylor_shifts;
    BigInt b1 = a + b;
    BigInt d1 = c + d;
    long r = 0;
    if (sign_of(p1.constant_term()) == 0) {
      emit_exact(b1, d1);
      p1 = shift_down(p1);
      r = 1;
    }
    long s1 = sign_variation(p1);
    long s2 = s - s1 - r;
    if (s2 < 0) throw internal_error("cf_positive: child budget went negative");

    IntPoly p2;
    bool have_p2 = false;
    if (s2 > 1) {
      p2 = taylor_shift_1(reverse(p));
      ++st.taylor_shifts;
      have_p2 = true;
      if (sign_of(p2.constant_term()) == 0) {
        // The root at 1 was already recorded through p1; drop it and replace
        // the stale budget with the exact variation count.
        p2 = shift_down(p2);
        s2 = sign_variation(p2);
      }
    }

    if (s1 == 1)
      raw_open.push_back(intvl(a, b1, c, d1, cap));
    else if (s1 > 1)
      work.push_back({{a, b1, c, d1}, std::move(p1), s1});

    if (s2 == 1) {
      if (!have_p2) {
        ++st.budget_one_emissions;
        if (opts.paranoid) {
          ++st.paranoid_checked;
          ++st.taylor_shifts;
          if (sign_variation(taylor_shift_1(reverse(p))) != 1)
            ++st.paranoid_violations;
        }
      }
      raw_open.push_back(intvl(b, a + b, d, c + d, cap));
    } else if (s2 > 1) {
      work.push_back({{b, a + b, d, c + d}, std::move(p2), s2});
    }
  }

  for (auto& iv : raw_open) {
    // The Cauchy cap strictly bounds every root, so an endpoint equal to it
    // needs no root check (evaluating there is also prohibitively expensive).
    const bool hi_is_cap = iv.hi == cap;
    if (eval_sign(f, iv.lo) == 0 || (!hi_is_cap && eval_sign(f, iv.hi) == 0))
      out.push_back(refine_open(f, std::move(iv.lo), std::move(iv.hi)));
    else
      out.push_back(std::move(iv));
  }
  std::sort(out.begin(), out.end(), interval_less);
  return out;
}

namespace {

Rational kth_root_floor_rat(const Rational& y, unsigned long k) {
  BigInt scaled;
  mpz_pow_ui(scaled.get_mpz_t(), y.get_den().get_mpz_t(), k - 1);
  scaled *= y.get_num();
  return make_rational(kth_root_floor(scaled, k), y.get_den());
}

Rational kth_root_ceil_rat(const Rational& y, unsigned long k) {
  BigInt scaled;
  mpz_pow_ui(scaled.get_mpz_t(), y.get_den().get_mpz_t(), k - 1);
  scaled *= y.get_num();
  bool exact = false;
  BigInt r = kth_root_floor(scaled, k, &exact);
  if (!exact) r += 1;
  return make_rational(r, y.get_den());
}

bool rational_kth_root_exact(const Rational& y, unsigned long k, Rational& out) {
  bool en = false;
  bool ed = false;
  BigInt rn = kth_root_floor(y.get_num(), k, &en);
  BigInt rd = kth_root_floor(y.get_den(), k, &ed);
  if (!en || !ed) return false;
  out = make_rational(rn, rd);
  return true;
}

// Descartes budget for the number of roots of f in (lx, hx): the sign
// variation of (1+t)^n f((lx + hx t)/(1+t)). 0 and 1 are exact answers.
// Requires lx < hx and f nonvanishing at both endpoints.
long interval_variation(const IntPoly& f, const Rational& lx, const Rational& hx) {
  const BigInt den = lx.get_den() * hx.get_den();
  BigInt lo_num = lx.get_num() * hx.get_den();
  BigInt width = hx.get_num() * lx.get_den() - lo_num;
  // g(u) = den^n f((lo_num + width u) / den) via Horner with linear factors;
  // roots of f in (lx, hx) correspond to roots of g in (0, 1).
  const auto& coef = f.coeffs();
  std::vector<BigInt> acc{coef.back()};
  BigInt den_pow(1);
  for (std::size_t i = coef.size() - 1; i-- > 0;) {
    den_pow *= den;
    std::vector<BigInt> next(acc.size() + 1, BigInt(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j] * lo_num;
      next[j + 1] += acc[j] * width;
    }
    next[0] += coef[i] * den_pow;
    acc = std::move(next);
  }
  IntPoly g(std::move(acc));
  if (g.is_zero()) throw internal_error("interval_variation: zero image");
  return sign_variation(taylor_shift_1(reverse(g)));
}

// One bisection step toward the single root inside an open interval whose
// endpoints are non-roots; may collapse it to an exact point.
void bisect_step(const IntPoly& f, RootInterval& iv) {
  Rational mid = (iv.lo + iv.hi) / 2;
  int s = eval_sign(f, mid);
  if (s == 0) {
    iv = RootInterval::exact_point(std::move(mid));
    return;
  }
  if (s != eval_sign(f, iv.lo))
    iv.hi = std::move(mid);
  else
    iv.lo = std::move(mid);
}

// Exact y-root r != 0 of the compressed polynomial: every x with x^k = r.
void map_exact_root(const IntPoly& p, unsigned long k, const Rational& r,
                    std::vector<RootInterval>& out) {
  const bool even = k % 2 == 0;
  if (sign_of(r) < 0 && even) return;  // no real k-th roots
  Rational mag = abs(r);
  Rational root;
  if (rational_kth_root_exact(mag, k, root)) {
    if (sign_of(r) > 0) {
      out.push_back(RootInterval::exact_point(root));
      if (even) out.push_back(RootInterval::exact_point(-root));
    } else {
      out.push_back(RootInterval::exact_point(-root));
    }
    return;
  }
  // Irrational k-th root: bracket |x0| by floor/ceil roots, tighten with
  // exact power comparisons until the Descartes budget certifies one root.
  Rational lx = kth_root_floor_rat(mag, k);
  Rational hx = kth_root_ceil_rat(mag, k);
  bool negative = sign_of(r) < 0;  // only reachable for odd k
  Rational lo = negative ? -hx : lx;
  Rational hi = negative ? -lx : hx;
  while (eval_sign(p, lo) == 0 || eval_sign(p, hi) == 0 ||
         interval_variation(p, lo, hi) != 1) {
    Rational mid = (lo + hi) / 2;
    // mid^k == r is impossible: the root is irrational.
    if (rational_pow(mid, k) < r)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  out.push_back(RootInterval::open(lo, hi));
  if (even) out.push_back(RootInterval::open(-hi, -lo));
}

// Open y-interval with a single root y0 of p1, sign(y0) = branch (+1 or -1),
// 0 <= ly < hy for the positive branch / ly < hy <= 0 for the negative one.
void map_open_interval(const IntPoly& p, const IntPoly& p1, unsigned long k,
                       Rational ly, Rational hy, int branch,
                       std::vector<RootInterval>& out) {
  const bool even = k % 2 == 0;
  while (true) {
    Rational lo;
    Rational hi;
    if (branch > 0) {
      lo = kth_root_floor_rat(ly, k);
      hi = kth_root_ceil_rat(hy, k);
    } else {
      lo = -kth_root_ceil_rat(abs(ly), k);
      hi = -kth_root_floor_rat(abs(hy), k);
    }
    if (eval_sign(p, lo) != 0 && eval_sign(p, hi) != 0 && lo < hi &&
        interval_variation(p, lo, hi) == 1) {
      out.push_back(RootInterval::open(lo, hi));
      if (even) out.push_back(RootInterval::open(-hi, -lo));
      return;
    }
    // Tighten the y-interval and retry; hitting the root exactly delegates
    // to the exact mapping.
    Rational mid = (ly + hy) / 2;
    int s = eval_sign(p1, mid);
    if (s == 0) {
      map_exact_root(p, k, mid, out);
      return;
    }
    if (s != eval_sign(p1, ly))
      hy = std::move(mid);
    else
      ly = std::move(mid);
  }
}

}  // namespace

std::vector<RootInterval> map_back_roots(const std::vector<RootInterval>& yroots,
                                         unsigned long k, const IntPoly& p) {
  if (k == 0) throw domain_error("map_back_roots: k must be positive");
  if (k == 1) return yroots;
  if (p.is_zero()) throw domain_error("map_back_roots: zero polynomial");

  // Rebuild the compressed polynomial p1 with p(x) = p1(x^k).
  std::vector<BigInt> compressed(static_cast<std::size_t>(p.degree()) / k + 1,
                                 BigInt(0));
  for (long e = 0; e <= p.degree(); ++e) {
    if (sign_of(p.coeff(static_cast<std::size_t>(e))) == 0) continue;
    if (static_cast<unsigned long>(e) % k != 0)
      throw domain_error("map_back_roots: exponents are not multiples of k");
    compressed[static_cast<std::size_t>(e) / k] =
        p.coeff(static_cast<std::size_t>(e));
  }
  IntPoly p1(std::move(compressed));

  std::vector<RootInterval> out;
  for (const RootInterval& yr : yroots) {
    if (yr.kind == IntervalKind::exact) {
      if (sign_of(yr.lo) == 0)
        out.push_back(RootInterval::exact_point(Rational(0)));
      else
        map_exact_root(p, k, yr.lo, out);
      continue;
    }
    Rational ly = yr.lo;
    Rational hy = yr.hi;
    int branch;
    if (sign_of(hy) <= 0) {
      branch = -1;
    } else if (sign_of(ly) >= 0) {
      branch = +1;
    } else {
      // Interval straddles 0: decide which side the single root is on.
      int s0 = eval_sign(p1, Rational(0));
      if (s0 == 0) {
        // The isolated root is 0 itself.
        out.push_back(RootInterval::exact_point(Rational(0)));
        continue;
      }
      if (s0 != eval_sign(p1, ly)) {
        hy = Rational(0);
        branch = -1;
      } else {
        ly = Rational(0);
        branch = +1;
      }
    }
    if (branch < 0 && k % 2 == 0) continue;  // negative y: no real k-th roots
    map_open_interval(p, p1, k, std::move(ly), std::move(hy), branch, out);
  }

  std::sort(out.begin(), out.end(), interval_less);
  // Verified intervals each hold exactly one root but may still overlap as
  // sets; shrink until the output is pairwise disjoint.
  for (std::size_t i = 1; i < out.size(); ++i) {
    RootInterval& a = out[i - 1];
    RootInterval& b = out[i];
    while (cmp(a.hi, b.lo) > 0) {
      bool shrunk = false;
      if (a.kind == IntervalKind::open) {
        bisect_step(p, a);
        shrunk = true;
      }
      if (cmp(a.hi, b.lo) > 0 && b.kind == IntervalKind::open) {
        bisect_step(p, b);
        shrunk = true;
      }
      if (!shrunk)
        throw internal_error("map_back_roots: conflicting exact roots");
    }
  }
  return out;
}

namespace {

std::vector<RootInterval> mirrored(std::vector<RootInterval> v) {
  for (auto& iv : v) {
    Rational lo = -iv.hi;
    Rational hi = -iv.lo;
    iv.lo = std::move(lo);
    iv.hi = std::move(hi);
  }
  std::reverse(v.begin(), v.end());
  return v;
}

// (lo, hi) isolates one root of g, g(0) != 0, and exactly one endpoint is 0.
// When 0 is itself a root of the full input, that endpoint must move off it:
// halve a probe toward 0 until it lands strictly between 0 and the root (same
// sign as g(0)); landing on the root collapses the interval to an exact point.
RootInterval detach_zero_endpoint(const IntPoly& g, Rational lo, Rational hi) {
  const bool at_lo = sign_of(lo) == 0;
  const int s0 = eval_sign(g, Rational(0));
  Rational t = (at_lo ? hi : lo) / 2;
  for (;;) {
    int s = eval_sign(g, t);
    if (s == 0) return RootInterval::exact_point(std::move(t));
    if (s == s0) break;
    t /= 2;
  }
  if (at_lo) return RootInterval::open(std::move(t), std::move(hi));
  return RootInterval::open(std::move(lo), std::move(t));
}

}  // namespace

std::vector<RootInterval> isolate(const IntPoly& p, const IsolateOptions& opts,
                                  IsolateStats* stats) {
  if (p.is_zero()) throw domain_error("isolate: zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;

  IntPoly f = square_free_part(p);
  bool zero_root = false;
  if (sign_of(f.constant_term()) == 0) {
    zero_root = true;
    out.push_back(RootInterval::exact_point(Rational(0)));
    f = shift_down(f);  // square-free: the root at 0 is simple
  }
  if (f.degree() >= 1) {
    bool routed = false;
    if (opts.use_substitution) {
      auto [compressed, k] = detect_power_substitution(f);
      if (k > 1) {
        IsolateOptions inner = opts;
        inner.use_substitution = false;
        std::vector<RootInterval> yroots = isolate(compressed, inner, stats);
        std::vector<RootInterval> mapped = map_back_roots(yroots, k, f);
        out.insert(out.end(), std::make_move_iterator(mapped.begin()),
                   std::make_move_iterator(mapped.end()));
        routed = true;
      }
    }
    if (!routed) {
      std::vector<RootInterval> neg = mirrored(cf_positive(reflect(f), opts, stats));
      std::vector<RootInterval> pos = cf_positive(f, opts, stats);
      out.insert(out.end(), std::make_move_iterator(neg.begin()),
                 std::make_move_iterator(neg.end()));
      out.insert(out.end(), std::make_move_iterator(pos.begin()),
                 std::make_move_iterator(pos.end()));
    }
  }
  if (zero_root) {
    // The exact root at 0 must not sit on a neighbor's open endpoint.
    for (auto& iv : out) {
      if (iv.kind != IntervalKind::open) continue;
      if (sign_of(iv.lo) == 0 || sign_of(iv.hi) == 0)
        iv = detach_zero_endpoint(f, std::move(iv.lo), std::move(iv.hi));
    }
  }
  std::sort(out.begin(), out.end(), interval_less);
  return out;
}

}  // namespace rri
