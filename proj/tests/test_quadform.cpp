#include "doctest.h"
#include "formsig/nflinalg.hpp"
#include "formsig/quadform.hpp"

#include <random>

using namespace formsig;

namespace {

UniPoly P(std::initializer_list<long long> cs) { return unipoly_from_ints(cs); }

EtaleAlgebra rationals() { return EtaleAlgebra::rationals(); }
EtaleAlgebra sqrt2_field() { return EtaleAlgebra({P({-2, 0, 1})}); }

QuadForm diag_q(const EtaleAlgebra& T, std::initializer_list<long long> d) {
  std::vector<EtaleElement> v;
  for (long long c : d) v.push_back(T.from_int(c));
  return qf_diagonal(T, v);
}

Mat<EtaleElement> random_invertible(const EtaleAlgebra& T, int n,
                                    std::mt19937_64& rng) {
  NumberField k = T.factor_field(0);
  for (;;) {
    Mat<EtaleElement> p(n, n, T.zero());
    for (auto& e : p.a) e = T.from_int(static_cast<long long>(rng() % 7) - 3);
    bool ok = true;
    for (int f = 0; f < T.factor_count() && ok; ++f) {
      Mat<UniPoly> m(n, n, {});
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m.at(i, j) = p.at(i, j).parts[static_cast<std::size_t>(f)];
      NumberField kf = T.factor_field(f);
      if (kf.is_zero(field_det(kf, m))) ok = false;
    }
    if (ok) return p;
  }
}

}  // namespace

TEST_CASE("diagonalize hyperbolic plane with the add-pivot move") {
  EtaleAlgebra Q = rationals();
  Mat<EtaleElement> g(2, 2, Q.zero());
  g.at(0, 1) = Q.one();
  g.at(1, 0) = Q.one();
  QuadForm q = qf_from_gram(Q, g);
  Diagonalization d = diagonalize(q);
  CHECK(d.form.gram.at(0, 0) == Q.from_int(2));
  CHECK(d.form.gram.at(1, 1) == Q.from_parts({{Rational(-1, 2)}}));
  CHECK(Q.is_zero(d.form.gram.at(0, 1)));
  // Congruence identity P^T G P = D.
  Mat<EtaleElement> check = congruence(Q, q.gram, d.witness);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(check.at(i, j) == d.form.gram.at(i, j));
}

TEST_CASE("diagonalize leaves diagonal forms alone") {
  QuadForm q = diag_q(rationals(), {3, 5});
  Diagonalization d = diagonalize(q);
  CHECK(d.form.gram.at(0, 0) == q.gram.at(0, 0));
  CHECK(d.form.gram.at(1, 1) == q.gram.at(1, 1));
  CHECK(d.witness.at(0, 0) == q.base.one());
  CHECK(d.witness.at(1, 1) == q.base.one());
  CHECK(q.base.is_zero(d.witness.at(0, 1)));
}

TEST_CASE("signature_at on basic forms") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  CHECK(signature_at(diag_q(Q, {1, 1, -1}), alpha) == 1);
  QuadForm tf = trace_form(sqrt2_field());
  CHECK(signature_at(tf, Q.orderings().at(0)) == 2);

  EtaleAlgebra K = sqrt2_field();
  auto ords = K.orderings();
  std::vector<EtaleElement> d{K.one(), K.generator()};
  QuadForm q = qf_diagonal(K, d);
  CHECK(signature_at(q, ords[1]) == 2);
  CHECK(signature_at(q, ords[0]) == 0);
}

TEST_CASE("trace_form matches the hand-derived Gram matrices") {
  QuadForm t1 = trace_form(sqrt2_field());
  CHECK(t1.gram.at(0, 0) == t1.base.from_int(2));
  CHECK(t1.gram.at(1, 1) == t1.base.from_int(4));
  CHECK(t1.base.is_zero(t1.gram.at(0, 1)));

  QuadForm t2 = trace_form(EtaleAlgebra({P({1, 0, 1})}));
  CHECK(t2.gram.at(0, 0) == t2.base.from_int(2));
  CHECK(t2.gram.at(1, 1) == t2.base.from_int(-2));

  QuadForm t3 = trace_form(EtaleAlgebra({P({0, -1, 0, 1})}));
  CHECK(t3.gram.at(0, 0) == t3.base.from_int(3));
  CHECK(t3.gram.at(1, 1) == t3.base.from_int(2));
  CHECK(t3.gram.at(2, 2) == t3.base.from_int(2));
  CHECK(t3.gram.at(0, 2) == t3.base.from_int(2));
  CHECK(t3.base.is_zero(t3.gram.at(0, 1)));
}

TEST_CASE("trace_form is nonsingular for random squarefree inputs") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly f;
    for (;;) {
      int deg = 1 + static_cast<int>(rng() % 5);
      f.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
      for (auto& c : f) c = Rational(static_cast<long long>(rng() % 19) - 9);
      f.back() = Rational(1);
      if (squarefree_check(f)) break;
    }
    CHECK(qf_nonsingular(trace_form(EtaleAlgebra({f}))));
  }
}

TEST_CASE("pfister forms") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  QuadForm p2 = pfister(Q, {Q.from_int(2)});
  CHECK(p2.dim() == 2);
  CHECK(signature_at(p2, alpha) == 2);
  QuadForm pm1 = pfister(Q, {Q.from_int(-1)});
  CHECK(signature_at(pm1, alpha) == 0);
  CHECK_THROWS_AS(pfister(Q, {Q.zero()}), std::domain_error);

  EtaleAlgebra K = sqrt2_field();
  auto ords = K.orderings();
  QuadForm pf = pfister(K, {K.generator(), K.generator()});
  CHECK(pf.dim() == 4);
  CHECK(signature_at(pf, ords[1]) == 4);
  CHECK(signature_at(pf, ords[0]) == 0);
}

TEST_CASE("sum, tensor, hyperbolic, scale") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  QuadForm one = diag_q(Q, {1});
  QuadForm minus = diag_q(Q, {-1});
  CHECK(signature_at(qf_sum(one, minus), alpha) == 0);
  CHECK(signature_at(qf_tensor(diag_q(Q, {1, 1}), diag_q(Q, {1, -1})), alpha) == 0);
  for (int n = 1; n <= 5; ++n)
    CHECK(signature_at(qf_hyperbolic(Q, n), alpha) == 0);
  QuadForm scaled = qf_scale(diag_q(Q, {1, 2}), Q.from_int(3));
  CHECK(scaled.gram.at(0, 0) == Q.from_int(3));
  CHECK(scaled.gram.at(1, 1) == Q.from_int(6));
  CHECK(signature_at(scaled, alpha) == signature_at(diag_q(Q, {1, 2}), alpha));
  CHECK_THROWS_AS(qf_scale(one, Q.zero()), std::domain_error);
}

TEST_CASE("signature is a ring morphism on random nonsingular forms") {
  std::mt19937_64 rng(515);
  int done = 0;
  while (done < 500) {
    UniPoly f;
    for (;;) {
      int deg = 1 + static_cast<int>(rng() % 3);
      f.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
      for (auto& c : f) c = Rational(static_cast<long long>(rng() % 11) - 5);
      f.back() = Rational(1);
      if (squarefree_check(f)) break;
    }
    EtaleAlgebra T({f});
    auto rand_diag = [&](int n) {
      std::vector<EtaleElement> d;
      while (static_cast<int>(d.size()) < n) {
        UniPoly p{Rational(static_cast<long long>(rng() % 9) - 4),
                  Rational(static_cast<long long>(rng() % 5) - 2)};
        EtaleElement e = T.embed_poly(poly_normalize(RationalField{}, std::move(p)));
        if (T.is_unit(e)) d.push_back(e);
      }
      return qf_diagonal(T, d);
    };
    QuadForm a = rand_diag(1 + static_cast<int>(rng() % 3));
    QuadForm b = rand_diag(1 + static_cast<int>(rng() % 3));
    for (const auto& ord : T.orderings()) {
      CHECK(signature_at(qf_sum(a, b), ord) ==
            signature_at(a, ord) + signature_at(b, ord));
      CHECK(signature_at(qf_tensor(a, b), ord) ==
            signature_at(a, ord) * signature_at(b, ord));
    }
    ++done;
  }
}

TEST_CASE("congruent Gram matrices have equal signatures") {
  std::mt19937_64 rng(616);
  for (int trial = 0; trial < 40; ++trial) {
    EtaleAlgebra T = (trial % 2) ? sqrt2_field() : rationals();
    int n = 2 + static_cast<int>(rng() % 2);
    Mat<EtaleElement> g(n, n, T.zero());
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        g.at(i, j) = T.from_int(static_cast<long long>(rng() % 7) - 3);
        g.at(j, i) = g.at(i, j);
      }
    QuadForm q = qf_from_gram(T, g);
    Mat<EtaleElement> p = random_invertible(T, n, rng);
    QuadForm qc = qf_from_gram(T, congruence(T, q.gram, p));
    for (const auto& ord : T.orderings())
      CHECK(signature_at(q, ord) == signature_at(qc, ord));
  }
}

TEST_CASE("transfer of quadratic forms along Q(sqrt 2)/Q") {
  EtaleAlgebra Q = rationals();
  RelativeEtale E(Q, {Q.from_int(-2), Q.zero(), Q.one()});  // y^2 - 2
  auto alpha = Q.orderings().at(0);

  SUBCASE("<1> transfers to the trace form") {
    RelQuadForm one = qf_diagonal(E, {E.one()});
    QuadForm tr = transfer_quadratic(E, one);
    CHECK(tr.gram.at(0, 0) == Q.from_int(2));
    CHECK(tr.gram.at(1, 1) == Q.from_int(4));
    CHECK(Q.is_zero(tr.gram.at(0, 1)));
    CHECK(signature_at(tr, alpha) == 2);
  }
  SUBCASE("<sqrt 2> transfers to the off-diagonal form") {
    RelQuadForm q = qf_diagonal(E, {E.generator()});
    QuadForm tr = transfer_quadratic(E, q);
    CHECK(Q.is_zero(tr.gram.at(0, 0)));
    CHECK(Q.is_zero(tr.gram.at(1, 1)));
    CHECK(tr.gram.at(0, 1) == Q.from_int(4));
    CHECK(signature_at(tr, alpha) == 0);
  }
  SUBCASE("complex quadratic extension transfers <1> to signature 0") {
    RelativeEtale C(Q, {Q.from_int(1), Q.zero(), Q.one()});  // y^2 + 1
    QuadForm tr = transfer_quadratic(C, qf_diagonal(C, {C.one()}));
    CHECK(tr.gram.at(0, 0) == Q.from_int(2));
    CHECK(tr.gram.at(1, 1) == Q.from_int(-2));
    CHECK(signature_at(tr, alpha) == 0);
  }
}

TEST_CASE("transfer preserves nonsingularity and hyperbolicity") {
  std::mt19937_64 rng(717);
  EtaleAlgebra Q = rationals();
  int done = 0;
  while (done < 15) {
    int deg = 2 + static_cast<int>(rng() % 3);
    std::vector<EtaleElement> f;
    for (int j = 0; j < deg; ++j)
      f.push_back(Q.from_int(static_cast<long long>(rng() % 9) - 4));
    f.push_back(Q.one());
    try {
      RelativeEtale E(Q, f);
      // Nonsingular diagonal over the total algebra.
      std::vector<TotalElement> d;
      while (static_cast<int>(d.size()) < 2) {
        std::vector<EtaleElement> cs;
        for (int j = 0; j < deg; ++j)
          cs.push_back(Q.from_int(static_cast<long long>(rng() % 5) - 2));
        TotalElement e = E.from_coeffs(cs);
        if (E.is_unit(e)) d.push_back(e);
      }
      RelQuadForm q = qf_diagonal(E, d);
      CHECK(qf_nonsingular(q));
      QuadForm tr = transfer_quadratic(E, q);
      CHECK(qf_nonsingular(tr));

      // Hyperbolic input in split presentation: the transferred form keeps
      // an explicit Lagrangian spanned by the first basis vector's
      // power-basis block.
      Mat<TotalElement> hg(2, 2, E.zero());
      hg.at(0, 1) = E.one();
      hg.at(1, 0) = E.one();
      QuadForm trh = transfer_quadratic(E, qf_from_gram(E, hg));
      std::vector<int> lagr;
      for (int u = 0; u < E.rel_degree(); ++u) lagr.push_back(u);
      CHECK(qf_hyperbolic_witness(trh, lagr));
      ++done;
    } catch (const std::domain_error&) {
      // inseparable draw
    }
  }
}

TEST_CASE("commutative trace formula on random extensions of Q") {
  std::mt19937_64 rng(818);
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  int done = 0;
  while (done < 25) {
    int deg = 1 + static_cast<int>(rng() % 5);
    std::vector<EtaleElement> f;
    for (int j = 0; j < deg; ++j)
      f.push_back(Q.from_int(static_cast<long long>(rng() % 9) - 4));
    f.push_back(Q.one());
    try {
      RelativeEtale E(Q, f);
      std::vector<TotalElement> d;
      while (static_cast<int>(d.size()) < 1 + static_cast<int>(rng() % 2)) {
        std::vector<EtaleElement> cs;
        for (int j = 0; j < deg; ++j)
          cs.push_back(Q.from_int(static_cast<long long>(rng() % 5) - 2));
        TotalElement e = E.from_coeffs(cs);
        if (E.is_unit(e)) d.push_back(e);
      }
      RelQuadForm q = qf_diagonal(E, d);
      long lhs = signature_at(transfer_quadratic(E, q), alpha);
      long rhs = 0;
      for (const auto& gamma : E.extensions_of(alpha))
        rhs += signature_at(q, gamma);
      CHECK(lhs == rhs);
      ++done;
    } catch (const std::domain_error&) {
      // inseparable draw
    }
  }
}
