#include "rri/oracle.hpp"

#include <algorithm>
#include <utility>

#include "rri/bounds.hpp"

namespace rri {

SturmChain sturm_chain(const IntPoly& p) {
  if (p.is_zero()) throw domain_error("sturm_chain: zero polynomial");
  SturmChain chain;
  chain.polys.push_back(primitive_part(p));
  IntPoly d = derivative(p);
  if (d.is_zero()) return chain;
  chain.polys.push_back(primitive_part(d));
  while (chain.polys.back().degree() > 0) {
    const IntPoly& a = chain.polys[chain.polys.size() - 2];
    const IntPoly& b = chain.polys.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(delta+1) * (a mod b); flip so the stored element is a
    // positive multiple of -(a mod b).
    const long delta = a.degree() - b.degree();
    const bool positive_multiplier =
        sign_of(b.leading()) > 0 || (delta + 1) % 2 == 0;
    IntPoly next = positive_multiplier ? negate(r) : std::move(r);
    chain.polys.push_back(primitive_part(next));
  }
  return chain;
}

long chain_sign_variation_at(const SturmChain& chain, const Rational& x) {
  long count = 0;
  int prev = 0;
  for (const IntPoly& p : chain.polys) {
    int s = eval_sign(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

long sturm_count(const SturmChain& chain, const Rational& a, const Rational& b) {
  if (!(a < b)) throw domain_error("sturm_count: need a < b");
  if (eval_sign(chain.polys.front(), a) == 0 ||
      eval_sign(chain.polys.front(), b) == 0)
    throw domain_error("sturm_count: endpoint is a root");
  return chain_sign_variation_at(chain, a) - chain_sign_variation_at(chain, b);
}

long sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw domain_error("sturm_count: zero polynomial");
  return sturm_count(sturm_chain(p), a, b);
}

namespace {

void oracle_split(const SturmChain& chain, const IntPoly& f, const Rational& lo,
                  const Rational& hi, std::vector<RootInterval>& out) {
  long count = sturm_count(chain, lo, hi);
  if (count == 0) return;
  if (count == 1) {
    out.push_back(RootInterval::open(lo, hi));
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (eval_sign(f, mid) != 0) {
    oracle_split(chain, f, lo, mid, out);
    oracle_split(chain, f, mid, hi, out);
    return;
  }
  // Exact root at the midpoint: carve out a root-free margin around it so the
  // recursion keeps nonvanishing endpoints.
  Rational eps = (hi - lo) / 4;
  while (eval_sign(f, mid - eps) == 0 || eval_sign(f, mid + eps) == 0 ||
         sturm_count(chain, mid - eps, mid + eps) != 1)
    eps /= 2;
  oracle_split(chain, f, lo, mid - eps, out);
  out.push_back(RootInterval::exact_point(mid));
  oracle_split(chain, f, mid + eps, hi, out);
}

}  // namespace

std::vector<RootInterval> oracle_isolate(const IntPoly& p) {
  if (p.is_zero()) throw domain_error("oracle_isolate: zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  IntPoly f = square_free_part(p);
  Rational cap = cauchy_bound(f);
  SturmChain chain = sturm_chain(f);
  oracle_split(chain, f, -cap, cap, out);  // strict bound: f(+-cap) != 0
  return out;
}

bool same_roots(const IntPoly& f, const std::vector<RootInterval>& lhs,
                const std::vector<RootInterval>& rhs) {
  if (lhs.size() != rhs.size()) return false;
  SturmChain chain;
  bool have_chain = false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const RootInterval& a = lhs[i];
    const RootInterval& b = rhs[i];
    if (a.kind == IntervalKind::exact && b.kind == IntervalKind::exact) {
      if (a.lo != b.lo) return false;
    } else if (a.kind == IntervalKind::exact || b.kind == IntervalKind::exact) {
      const RootInterval& pt = a.kind == IntervalKind::exact ? a : b;
      const RootInterval& iv = a.kind == IntervalKind::exact ? b : a;
      if (!(iv.lo < pt.lo && pt.lo < iv.hi)) return false;
    } else {
      Rational lo_max = std::max(a.lo, b.lo);
      Rational hi_min = std::min(a.hi, b.hi);
      if (!(lo_max < hi_min)) return false;  // must overlap
      if (!have_chain) {
        chain = sturm_chain(f);
        have_chain = true;
      }
      Rational lo = std::min(a.lo, b.lo);
      Rational hi = std::max(a.hi, b.hi);
      if (sturm_count(chain, lo, hi) != 1) return false;
    }
  }
  return true;
}

}  // namespace rri
