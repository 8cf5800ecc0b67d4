#include "doctest.h"
#include "formsig/etale.hpp"
#include "formsig/relative.hpp"

#include <random>

using namespace formsig;

namespace {

UniPoly P(std::initializer_list<long long> cs) { return unipoly_from_ints(cs); }

EtaleAlgebra sqrt2_field() { return EtaleAlgebra({P({-2, 0, 1})}); }

RelativeEtale rational_extension(std::initializer_list<long long> cs) {
  EtaleAlgebra q = EtaleAlgebra::rationals();
  std::vector<EtaleElement> f;
  for (long long c : cs) f.push_back(q.from_int(c));
  return RelativeEtale(q, std::move(f));
}

}  // namespace

TEST_CASE("etale algebra construction validates factors") {
  CHECK_THROWS_AS(EtaleAlgebra({P({0, 0, 1})}), std::domain_error);  // x^2
  CHECK_THROWS_AS(EtaleAlgebra({P({-2, 0, 2})}), std::domain_error); // not monic
  CHECK_THROWS_AS(EtaleAlgebra({}), std::domain_error);
  CHECK(EtaleAlgebra({P({-2, 0, 1}), P({-1, 1})}).rank() == 3);
}

TEST_CASE("element arithmetic in Q[x]/(x^2 - 2)") {
  EtaleAlgebra T = sqrt2_field();
  EtaleElement x = T.generator();
  CHECK(T.mul(x, x) == T.from_int(2));
  // inv(x) = x/2, since x * x/2 = 1
  EtaleElement ix = T.inv(x);
  CHECK(T.mul(x, ix) == T.one());
  CHECK(ix == T.from_parts({{Rational(0), Rational(1, 2)}}));
}

TEST_CASE("zero divisors are explicit errors") {
  EtaleAlgebra T({P({0, -1, 0, 1})});  // x^3 - x, reducible on purpose
  EtaleElement x = T.generator();
  CHECK_FALSE(T.is_unit(x));
  CHECK_THROWS_AS(T.inv(x), NotAUnitError);
  // x * (x^2 - 1) = 0 in this algebra
  EtaleElement y = T.sub(T.mul(x, x), T.one());
  CHECK(T.is_zero(T.mul(x, y)));
}

TEST_CASE("trace via the regular representation") {
  EtaleAlgebra T = sqrt2_field();
  CHECK(T.trace(T.one()) == Rational(2));
  CHECK(T.trace(T.generator()) == Rational(0));
  EtaleAlgebra G({P({1, 0, 1})});  // x^2 + 1
  EtaleElement x2 = G.mul(G.generator(), G.generator());
  CHECK(G.trace(x2) == Rational(-2));
}

TEST_CASE("trace is linear and trace(1) equals the rank") {
  std::mt19937_64 rng(404);
  RationalField qq;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<UniPoly> factors;
    int nf = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < nf; ++i) {
      for (;;) {
        int deg = 1 + static_cast<int>(rng() % 3);
        UniPoly f(static_cast<std::size_t>(deg) + 1);
        for (auto& c : f) c = Rational(static_cast<long long>(rng() % 11) - 5);
        f.back() = Rational(1);
        if (squarefree_check(f)) {
          factors.push_back(f);
          break;
        }
      }
    }
    EtaleAlgebra T(factors);
    CHECK(T.trace(T.one()) == Rational(T.rank()));
    auto rand_elem = [&] {
      UniPoly p(4);
      for (auto& c : p) c = Rational(static_cast<long long>(rng() % 9) - 4);
      return T.embed_poly(poly_normalize(qq, std::move(p)));
    };
    EtaleElement a = rand_elem(), b = rand_elem();
    CHECK(T.trace(T.add(a, b)) == T.trace(a) + T.trace(b));
    Rational lam(static_cast<long long>(rng() % 7) - 3);
    CHECK(T.trace(T.mul(T.from_rational(lam), a)) == lam * T.trace(a));
  }
}

TEST_CASE("orderings enumerate real roots over all factors") {
  CHECK(sqrt2_field().orderings().size() == 2);
  CHECK(EtaleAlgebra({P({1, 0, 1})}).orderings().size() == 0);
  EtaleAlgebra prod = etale_product(sqrt2_field(), EtaleAlgebra({P({-1, 1})}));
  CHECK(prod.orderings().size() == 3);
}

TEST_CASE("sign_at distinguishes the orderings of Q(sqrt 2)") {
  EtaleAlgebra T = sqrt2_field();
  auto ords = T.orderings();
  REQUIRE(ords.size() == 2);
  EtaleElement x = T.generator();
  CHECK(T.sign_at(x, ords[0]) == -1);  // sorted ascending: -sqrt2 first
  CHECK(T.sign_at(x, ords[1]) == 1);
  CHECK(T.sign_at(T.zero(), ords[0]) == 0);
}

TEST_CASE("extensions of orderings along y^2 = x over Q(sqrt 2)") {
  EtaleAlgebra K = sqrt2_field();
  // f = y^2 - x
  std::vector<EtaleElement> f{K.neg(K.generator()), K.zero(), K.one()};
  RelativeEtale E(K, f);
  auto ords = K.orderings();
  REQUIRE(ords.size() == 2);
  const Ordering& neg = ords[0];
  const Ordering& pos = ords[1];
  CHECK(E.extensions_of(pos).size() == 2);
  CHECK(E.extensions_of(neg).size() == 0);

  for (const auto& g : E.extensions_of(pos)) {
    CHECK(E.pullback_check(g, pos));
    CHECK_FALSE(E.pullback_check(g, neg));
  }
}

TEST_CASE("extensions over the rational base") {
  RelativeEtale E = rational_extension({0, -1, 0, 1});  // y^3 - y
  auto base_ords = EtaleAlgebra::rationals().orderings();
  REQUIRE(base_ords.size() == 1);
  CHECK(E.extensions_of(base_ords[0]).size() == 3);
  // Unique base ordering pulls back trivially.
  for (const auto& g : E.extensions_of(base_ords[0]))
    CHECK(E.pullback_check(g, base_ords[0]));
}

TEST_CASE("total algebra arithmetic and inverses") {
  RelativeEtale E = rational_extension({-2, 0, 1});  // y^2 - 2
  TotalElement y = E.generator();
  CHECK(E.mul(y, y) == E.from_int(2));
  TotalElement iy = E.inv(y);
  CHECK(E.mul(y, iy) == E.one());

  RelativeEtale R = rational_extension({0, -1, 0, 1});  // y^3 - y
  CHECK_THROWS_AS(R.inv(R.generator()), NotAUnitError);
}

TEST_CASE("trace_down matches the absolute trace over Q") {
  RelativeEtale E = rational_extension({-2, 0, 1});
  EtaleAlgebra Q = EtaleAlgebra::rationals();
  CHECK(Q.trace(E.trace_down(E.one())) == Rational(2));
  // Tr(y) = 0, Tr(y^2) = 4 over the rational base (rank-1 base trace is id).
  TotalElement y = E.generator();
  CHECK(Q.is_zero(E.trace_down(y)));
  CHECK(E.trace_down(E.mul(y, y)) == Q.from_int(4));
}

TEST_CASE("odd relative rank forces an extension at every base ordering") {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 20) {
    int deg = (rng() % 2) ? 3 : 5;
    EtaleAlgebra K = sqrt2_field();
    std::vector<EtaleElement> f;
    for (int j = 0; j < deg; ++j) {
      UniPoly p{Rational(static_cast<long long>(rng() % 7) - 3),
                Rational(static_cast<long long>(rng() % 5) - 2)};
      f.push_back(K.embed_poly(poly_normalize(RationalField{}, std::move(p))));
    }
    f.push_back(K.one());
    try {
      RelativeEtale E(K, f);
      for (const auto& alpha : K.orderings())
        CHECK(E.extensions_of(alpha).size() >= 1);
      ++checked;
    } catch (const std::domain_error&) {
      // inseparable draw, retry
    }
  }
}

TEST_CASE("relative sign determination at extension orderings") {
  EtaleAlgebra K = sqrt2_field();
  std::vector<EtaleElement> f{K.neg(K.generator()), K.zero(), K.one()};
  RelativeEtale E(K, f);  // y^2 = sqrt(2)
  auto pos_exts = E.extensions_of(K.orderings()[1]);
  REQUIRE(pos_exts.size() == 2);
  TotalElement y = E.generator();
  // The two square roots of sqrt(2) have opposite signs; their squares agree.
  CHECK(E.sign_at(y, pos_exts[0]) == -1);
  CHECK(E.sign_at(y, pos_exts[1]) == 1);
  CHECK(E.sign_at(E.mul(y, y), pos_exts[0]) == 1);
  CHECK(E.sign_at(E.mul(y, y), pos_exts[1]) == 1);
  CHECK(E.sign_at(E.zero(), pos_exts[0]) == 0);
  // x (the base sqrt(2)) embeds as a y-constant, positive here.
  CHECK(E.sign_at(E.embed(K.generator()), pos_exts[0]) == 1);
}
