#include "doctest.h"

#include <random>
#include <vector>

#include "rri/oracle.hpp"
#include "rri/vas.hpp"
#include "test_util.hpp"

using namespace rri;
using testutil::poly_from_roots;
using testutil::random_poly;

TEST_CASE("Sturm chain shape on fixed polynomials") {
  SturmChain c = sturm_chain(IntPoly({-2, 0, 1}));  // x^2 - 2
  REQUIRE(c.polys.size() == 3);
  CHECK(c.polys[0] == IntPoly({-2, 0, 1}));
  CHECK(c.polys[1] == IntPoly({0, 1}));  // derivative, primitive part
  CHECK(c.polys[2].degree() == 0);
  CHECK(sign_of(c.polys[2].coeff(0)) > 0);  // -(-2) after negation

  // Chains stop early for non-square-free input.
  SturmChain sq = sturm_chain(IntPoly({1, -2, 1}));  // (x-1)^2
  CHECK(sq.polys.back().degree() == 1);
}

TEST_CASE("Sturm counting at pinned values") {
  IntPoly p({-2, 0, 1});  // x^2 - 2
  CHECK(sturm_count(p, Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(p, Rational(-2), Rational(2)) == 2);
  CHECK(sturm_count(p, Rational(2), Rational(3)) == 0);
  CHECK(sturm_count(IntPoly({1, 0, 1}), Rational(-10), Rational(10)) == 0);

  CHECK_THROWS_AS(sturm_count(p, Rational(2), Rational(1)), domain_error);
  CHECK_THROWS_AS(sturm_count(p, Rational(1), Rational(1)), domain_error);
  // Endpoints must not be roots.
  IntPoly q({-1, 0, 1});  // x^2 - 1
  CHECK_THROWS_AS(sturm_count(q, Rational(1), Rational(2)), domain_error);
  CHECK_THROWS_AS(sturm_count(q, Rational(-3), Rational(-1)), domain_error);
}

TEST_CASE("Sturm counts are additive over adjacent intervals") {
  std::mt19937_64 rng(401);
  int tested = 0;
  for (int t = 0; t < 80; ++t) {
    IntPoly p = random_poly(rng, 1 + static_cast<long>(rng() % 10), 1 << 14);
    Rational a = testutil::random_rational(rng, 40, 6);
    Rational b = a + abs(testutil::random_rational(rng, 20, 6)) + 1;
    Rational m = (a + b) / 2;
    if (eval_sign(p, a) == 0 || eval_sign(p, b) == 0 || eval_sign(p, m) == 0)
      continue;
    SturmChain chain = sturm_chain(p);
    CHECK(sturm_count(chain, a, b) ==
          sturm_count(chain, a, m) + sturm_count(chain, m, b));
    ++tested;
  }
  CHECK(tested >= 50);
}

TEST_CASE("Sturm count equals the number of planted roots") {
  std::mt19937_64 rng(402);
  for (int t = 0; t < 25; ++t) {
    std::vector<long> roots;
    long k = 1 + static_cast<long>(rng() % 6);
    for (long i = 0; i < k; ++i)
      roots.push_back(static_cast<long>(rng() % 41) - 20);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    IntPoly p = poly_from_roots(roots);
    Rational lo = Rational(roots.front()) - Rational(1, 2);
    Rational hi = Rational(roots.back()) + Rational(1, 2);
    CHECK(sturm_count(p, lo, hi) == static_cast<long>(roots.size()));
  }
}

TEST_CASE("bisection isolator on fixed polynomials") {
  std::vector<RootInterval> cube = oracle_isolate(IntPoly({0, -1, 0, 1}));
  REQUIRE(cube.size() == 3);
  CHECK(cube[1] == RootInterval::exact_point(Rational(0)));
  IntPoly f({0, -1, 0, 1});
  CHECK(eval_sign(f, cube[0].lo) != 0);
  CHECK(cube[0].lo < Rational(-1));
  CHECK(Rational(-1) < cube[0].hi);
  CHECK(cube[2].lo < Rational(1));
  CHECK(Rational(1) < cube[2].hi);

  CHECK(oracle_isolate(IntPoly({1, 0, 1})).empty());
  CHECK(oracle_isolate(IntPoly({7})).empty());
  CHECK_THROWS_AS(oracle_isolate(IntPoly()), domain_error);

  std::vector<RootInterval> w5 = oracle_isolate(poly_from_roots({1, 2, 3, 4, 5}));
  REQUIRE(w5.size() == 5);
  for (long r = 1; r <= 5; ++r) {
    if (w5[r - 1].kind == IntervalKind::exact) {
      CHECK(w5[r - 1].lo == Rational(r));
    } else {
      CHECK(w5[r - 1].lo < Rational(r));
      CHECK(Rational(r) < w5[r - 1].hi);
    }
  }
}

TEST_CASE("bisection isolator output satisfies the isolation contract") {
  std::mt19937_64 rng(403);
  for (int t = 0; t < 40; ++t) {
    IntPoly p = random_poly(rng, 1 + static_cast<long>(rng() % 10), 1 << 12);
    IntPoly f = square_free_part(p);
    std::vector<RootInterval> out = oracle_isolate(p);
    SturmChain chain = sturm_chain(f);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const RootInterval& iv = out[i];
      if (iv.kind == IntervalKind::exact) {
        CHECK(eval_sign(f, iv.lo) == 0);
      } else {
        CHECK(eval_sign(f, iv.lo) != 0);
        CHECK(eval_sign(f, iv.hi) != 0);
        CHECK(sturm_count(chain, iv.lo, iv.hi) == 1);
      }
      if (i > 0) CHECK(interval_less(out[i - 1], iv));
    }
    Rational cap = cauchy_bound(f);
    CHECK(static_cast<long>(out.size()) == sturm_count(chain, -cap, cap));
  }
}

TEST_CASE("same_roots accepts agreeing descriptions") {
  IntPoly f({-2, 0, 1});  // roots +-sqrt(2)
  std::vector<RootInterval> a = {
      RootInterval::open(Rational(-2), Rational(-1)),
      RootInterval::open(Rational(1), Rational(2)),
  };
  std::vector<RootInterval> b = {
      RootInterval::open(Rational(-3), Rational(-5, 4)),
      RootInterval::open(Rational(5, 4), Rational(3)),
  };
  CHECK(same_roots(f, a, b));
  CHECK(same_roots(f, a, a));

  // An exact point matches an open interval containing it.
  IntPoly g({-1, 0, 1});  // roots +-1
  std::vector<RootInterval> exact = {
      RootInterval::exact_point(Rational(-1)),
      RootInterval::exact_point(Rational(1)),
  };
  std::vector<RootInterval> open = {
      RootInterval::open(Rational(-2), Rational(-1, 2)),
      RootInterval::open(Rational(1, 2), Rational(2)),
  };
  CHECK(same_roots(g, exact, open));
  CHECK(same_roots(g, open, exact));
}

TEST_CASE("same_roots rejects disagreeing descriptions") {
  IntPoly g({-1, 0, 1});  // roots +-1
  std::vector<RootInterval> exact = {
      RootInterval::exact_point(Rational(-1)),
      RootInterval::exact_point(Rational(1)),
  };
  // Wrong count.
  CHECK_FALSE(same_roots(g, exact, {exact[0]}));
  // Wrong exact value.
  CHECK_FALSE(same_roots(
      g, exact,
      {RootInterval::exact_point(Rational(-1)),
       RootInterval::exact_point(Rational(2))}));
  // Disjoint open intervals cannot describe the same root.
  IntPoly f({-2, 0, 1});
  CHECK_FALSE(same_roots(
      f,
      {RootInterval::open(Rational(-2), Rational(-1)),
       RootInterval::open(Rational(1), Rational(13, 10))},
      {RootInterval::open(Rational(-2), Rational(-1)),
       RootInterval::open(Rational(7, 5), Rational(2))}));
}

TEST_CASE("engine and oracle agree on random polynomials") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 50; ++t) {
    IntPoly p = random_poly(rng, 1 + static_cast<long>(rng() % 14), 1 << 16);
    std::vector<RootInterval> engine = isolate(p);
    std::vector<RootInterval> oracle = oracle_isolate(p);
    IntPoly f = square_free_part(p);
    REQUIRE(engine.size() == oracle.size());
    CHECK(same_roots(f, engine, oracle));
  }
}
