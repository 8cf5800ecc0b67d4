#include "doctest.h"
#include "formsig/poly.hpp"
#include "formsig/roots.hpp"
#include "formsig/oracle.hpp"

#include <random>

using namespace formsig;

namespace {

const RationalField qq;

UniPoly P(std::initializer_list<long long> cs) { return unipoly_from_ints(cs); }

// Deterministic random squarefree polynomial, degree in [1, max_deg],
// integer coefficients in [-9, 9].
UniPoly random_squarefree(std::mt19937_64& rng, int max_deg) {
  for (;;) {
    int deg = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_deg));
    UniPoly p(static_cast<std::size_t>(deg) + 1);
    for (auto& c : p) c = Rational(static_cast<long long>(rng() % 19) - 9);
    while (p.back().is_zero()) p.back() = Rational(static_cast<long long>(rng() % 19) - 9);
    p = poly_normalize(qq, std::move(p));
    if (poly_deg(p) >= 1 && squarefree_check(p)) return p;
  }
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rational_from_string("3/6") == Rational(1, 2));
  CHECK(rational_from_string("-4") == Rational(-4));
  CHECK(rational_to_string(Rational(-7, 3)) == "-7/3");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic basics") {
  UniPoly a = P({-2, 0, 1});  // x^2 - 2
  UniPoly b = P({1, 1});      // x + 1
  CHECK(poly_deg(poly_mul(qq, a, b)) == 3);
  auto [q, r] = poly_divmod(qq, a, b);
  // x^2 - 2 = (x + 1)(x - 1) - 1
  CHECK(poly_eq(qq, q, P({-1, 1})));
  CHECK(poly_eq(qq, r, P({-1})));
  CHECK(poly_eq(qq, poly_derivative(qq, a), P({0, 2})));
  CHECK(poly_eval_rational(qq, a, Rational(3)) == Rational(7));
}

TEST_CASE("squarefree_check") {
  CHECK(squarefree_check(P({-2, 0, 1})));   // x^2 - 2: roots +-sqrt(2)
  CHECK_FALSE(squarefree_check(P({0, 0, 1})));  // x^2: double root
  CHECK(squarefree_check(P({0, -1, 0, 1})));    // x^3 - x
  CHECK_THROWS_AS(squarefree_check(UniPoly{}), std::domain_error);
}

TEST_CASE("sturm_chain matches the hand-computed remainder sequences") {
  SUBCASE("x^2 - 2") {
    SturmChain c = sturm_chain(P({-2, 0, 1}));
    REQUIRE(c.polys.size() == 3);
    CHECK(poly_eq(qq, c.polys[0], P({-2, 0, 1})));
    CHECK(poly_eq(qq, c.polys[1], P({0, 2})));
    CHECK(poly_eq(qq, c.polys[2], P({2})));
  }
  SUBCASE("x") {
    SturmChain c = sturm_chain(P({0, 1}));
    REQUIRE(c.polys.size() == 2);
    CHECK(poly_eq(qq, c.polys[0], P({0, 1})));
    CHECK(poly_eq(qq, c.polys[1], P({1})));
  }
  SUBCASE("x^2 + 1") {
    SturmChain c = sturm_chain(P({1, 0, 1}));
    REQUIRE(c.polys.size() == 3);
    CHECK(poly_eq(qq, c.polys[2], P({-1})));
  }
  SUBCASE("non-squarefree input is a domain error") {
    CHECK_THROWS_AS(sturm_chain(P({0, 0, 1})), std::domain_error);
  }
}

TEST_CASE("count_real_roots on the named examples") {
  CHECK(count_real_roots(P({-2, 0, 1}), Bound::neg_inf(), Bound::pos_inf()) == 2);
  CHECK(count_real_roots(P({1, 0, 1}), Bound::neg_inf(), Bound::pos_inf()) == 0);
  CHECK(count_real_roots(P({0, -1, 0, 1}), Bound::at(Rational(0)),
                         Bound::pos_inf()) == 1);
}

TEST_CASE("count_real_roots is additive over interval splits") {
  UniPoly p = P({0, -1, 0, 1});  // roots -1, 0, 1
  long total = count_real_roots(p, Bound::at(Rational(-2)), Bound::at(Rational(2)));
  long left = count_real_roots(p, Bound::at(Rational(-2)), Bound::at(Rational(0)));
  long right = count_real_roots(p, Bound::at(Rational(0)), Bound::at(Rational(2)));
  CHECK(total == 3);
  CHECK(left + right == total);
  // (lo, hi] convention: 0 lands in the left half.
  CHECK(left == 2);
}

TEST_CASE("isolate_real_roots") {
  SUBCASE("x^2 - 2 gives two disjoint sign-changing intervals") {
    auto roots = isolate_real_roots(P({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].hi < roots[1].lo);
    for (const auto& r : roots) {
      CHECK(r.lo <= r.hi);
      if (!r.is_exact()) {
        int slo = sign_of(poly_eval_rational(qq, r.defining, r.lo));
        int shi = sign_of(poly_eval_rational(qq, r.defining, r.hi));
        CHECK(slo * shi < 0);
      }
    }
  }
  SUBCASE("x^2 + 1 has no real roots") {
    CHECK(isolate_real_roots(P({1, 0, 1})).empty());
  }
  SUBCASE("x^3 - x isolates -1, 0, 1") {
    auto roots = isolate_real_roots(P({0, -1, 0, 1}));
    REQUIRE(roots.size() == 3);
    UniPoly x = P({0, 1});
    CHECK(sign_at(x, roots[0]) == -1);
    CHECK(sign_at(x, roots[1]) == 0);
    CHECK(sign_at(x, roots[2]) == 1);
  }
}

TEST_CASE("refine shrinks the interval and keeps the root") {
  auto roots = isolate_real_roots(P({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  RealAlgebraic sqrt2 = roots[1];
  RealAlgebraic fine = refine(sqrt2, Rational(1, 100));
  CHECK(fine.hi - fine.lo <= Rational(1, 100));
  // Same root: sign tests agree before and after refinement.
  UniPoly g = P({-2, 1});  // x - 2
  CHECK(sign_at(g, sqrt2) == sign_at(g, fine));
  CHECK(sign_at(g, fine) == -1);
  CHECK_THROWS_AS(refine(sqrt2, Rational(0)), std::domain_error);
}

TEST_CASE("sign_at on the named examples") {
  auto roots = isolate_real_roots(P({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  const RealAlgebraic& pos = roots[1];
  CHECK(sign_at(P({0, 1}), pos) == 1);           // x at sqrt(2)
  CHECK(sign_at(P({-2, 0, 1}), pos) == 0);       // defining polynomial
  CHECK(sign_at(P({-2, 0, 1}), roots[0]) == 0);
  CHECK(sign_at(P({-2, 1}), pos) == -1);         // sqrt(2) < 2
}

TEST_CASE("root counts agree with the Descartes bisection oracle") {
  std::mt19937_64 rng(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly p = random_squarefree(rng, 6);
    long sturm = count_real_roots(p, Bound::neg_inf(), Bound::pos_inf());
    long oracle = testing::oracle_count_all(p);
    CAPTURE(unipoly_to_string(p));
    REQUIRE(sturm == oracle);
    auto isolated = isolate_real_roots(p);
    REQUIRE(static_cast<long>(isolated.size()) == sturm);
    for (std::size_t i = 0; i + 1 < isolated.size(); ++i)
      CHECK(isolated[i].hi < isolated[i + 1].lo);
    // Each isolated interval holds exactly one root by the oracle's count.
    for (const auto& r : isolated) {
      if (r.is_exact()) {
        CHECK(poly_eval_rational(qq, p, r.lo).is_zero());
      } else {
        CHECK(testing::oracle_count_halfopen(p, r.lo, r.hi) == 1);
      }
    }
  }
}

TEST_CASE("sign_at is stable under refinement") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly p = random_squarefree(rng, 5);
    UniPoly g = random_squarefree(rng, 4);
    for (const auto& r : isolate_real_roots(p)) {
      int before = sign_at(g, r);
      RealAlgebraic fine = refine(r, Rational(1, 1000));
      CHECK(sign_at(g, fine) == before);
    }
  }
}

TEST_CASE("sign_at vanishes exactly on shared roots") {
  // g = (x - 1) * (x^2 - 2) shares the sqrt(2) roots with x^2 - 2.
  UniPoly g = poly_mul(qq, P({-1, 1}), P({-2, 0, 1}));
  for (const auto& r : isolate_real_roots(P({-2, 0, 1})))
    CHECK(sign_at(g, r) == 0);
  for (const auto& r : isolate_real_roots(P({0, -1, 0, 1}))) {
    // roots -1, 0, 1: only x = 1 is shared with g.
    UniPoly x = P({0, 1});
    if (sign_at(x, r) == 1 && sign_at(P({-1, 1}), r) == 0)
      CHECK(sign_at(g, r) == 0);
  }
}

TEST_CASE("root comparison and equality") {
  auto roots = isolate_real_roots(P({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(compare_roots(qq, roots[0], roots[1]) == -1);
  CHECK(roots_equal(qq, roots[0], roots[0]));
  RealAlgebraic wide = roots[1];
  wide.lo = Rational(0);
  wide.hi = Rational(2);
  CHECK(roots_equal(qq, wide, roots[1]));
  CHECK_FALSE(roots_equal(qq, wide, roots[0]));
}
