#include "doctest.h"
#include "builders.hpp"
#include "formsig/transfer.hpp"

#include <random>

using namespace formsig;
using namespace formsig::testing;

namespace {

EtaleAlgebra rationals() { return EtaleAlgebra::rationals(); }

RelativeEtale rational_extension(std::initializer_list<long long> cs) {
  EtaleAlgebra q = rationals();
  std::vector<EtaleElement> f;
  for (long long c : cs) f.push_back(q.from_int(c));
  return RelativeEtale(q, std::move(f));
}

// Diagonal form over the extended algebra with y-polynomial central entries.
RelHermForm central_diag(const RelInvolutiveAlgebra& AE,
                         const std::vector<TotalElement>& entries) {
  std::vector<AlgElemT<RelativeEtale>> d;
  for (const auto& e : entries) {
    AlgElemT<RelativeEtale> s = AE.zero_elem();
    for (int i = 0; i < AE.n(); ++i) s.at(i, i) = AE.dfrom_base(e);
    d.push_back(std::move(s));
  }
  return diagonal_form(AE, d);
}

// A random unit of the total algebra (polynomial in y).
TotalElement random_unit(const RelativeEtale& E, std::mt19937_64& rng) {
  for (;;) {
    std::vector<EtaleElement> cs;
    for (int j = 0; j < E.rel_degree(); ++j)
      cs.push_back(E.base().from_int(static_cast<long long>(rng() % 7) - 3));
    TotalElement e = E.from_coeffs(cs);
    if (E.is_unit(e)) return e;
  }
}

}  // namespace

TEST_CASE("transfer_hermitian over the rational base reproduces trace forms") {
  EtaleAlgebra Q = rationals();
  RelativeEtale E = rational_extension({-2, 0, 1});  // y^2 - 2
  auto alpha = Q.orderings().at(0);

  SUBCASE("commutative algebra, h = <sqrt 2>") {
    TransferContext ctx(alg_base_id(Q), E);
    RelHermForm h = central_diag(ctx.extended, {E.generator()});
    HermForm tr = transfer_hermitian(ctx, h);
    CHECK(tr.dim() == 2);
    CHECK(Q.is_zero(tr.gram.at(0, 0).at(0, 0).c[0]));
    CHECK(tr.gram.at(0, 1).at(0, 0).c[0] == Q.from_int(4));
    CHECK(tr.gram.at(1, 0).at(0, 0).c[0] == Q.from_int(4));
    ReferenceForm eta = find_reference_form(ctx.algebra);
    CHECK(eta_signature(tr, alpha, eta) == 0);
  }
  SUBCASE("commutative algebra, h = <1>") {
    TransferContext ctx(alg_base_id(Q), E);
    RelHermForm h = central_diag(ctx.extended, {E.one()});
    HermForm tr = transfer_hermitian(ctx, h);
    CHECK(tr.gram.at(0, 0).at(0, 0).c[0] == Q.from_int(2));
    CHECK(tr.gram.at(1, 1).at(0, 0).c[0] == Q.from_int(4));
    ReferenceForm eta = find_reference_form(ctx.algebra);
    CHECK(eta_signature(tr, alpha, eta) == 2);
  }
  SUBCASE("quaternion algebra, h = <1> and h = <sqrt 2>") {
    TransferContext ctx(alg_quaternion(Q), E);
    ReferenceForm eta = find_reference_form(ctx.algebra);
    RelHermForm one = central_diag(ctx.extended, {E.one()});
    CHECK(eta_signature(transfer_hermitian(ctx, one), alpha, eta) == 2);
    RelHermForm s2 = central_diag(ctx.extended, {E.generator()});
    CHECK(eta_signature(transfer_hermitian(ctx, s2), alpha, eta) == 0);
  }
}

TEST_CASE("split_at on the named extensions") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  TransferContext c1(alg_base_id(Q), rational_extension({-2, 0, 1}));
  SplitReport r1 = split_at(c1, alpha);
  CHECK(r1.r == 2);
  CHECK(r1.t == 2);

  TransferContext c2(alg_base_id(Q), rational_extension({1, 0, 1}));
  SplitReport r2 = split_at(c2, alpha);
  CHECK(r2.r == 0);
  CHECK(r2.t == 2);

  TransferContext c3(alg_base_id(Q), rational_extension({0, -1, 0, 1}));
  SplitReport r3 = split_at(c3, alpha);
  CHECK(r3.r == 3);
  CHECK(r3.t == 3);

  // x^4 - x^2 - 2 = (x^2 - 2)(x^2 + 1)
  TransferContext c4(alg_base_id(Q), rational_extension({-2, 0, -1, 0, 1}));
  SplitReport r4 = split_at(c4, alpha);
  CHECK(r4.r == 2);
  CHECK(r4.t == 4);
}

TEST_CASE("verify_ktf_commutative on the worked examples") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  RelativeEtale E = rational_extension({-2, 0, 1});

  KtfReport a = verify_ktf_commutative(
      E, qf_diagonal(E, std::vector<TotalElement>{E.one()}), alpha);
  CHECK(a.pass);
  CHECK(a.lhs == 2);
  CHECK(a.per_gamma == std::vector<int>{1, 1});

  KtfReport b = verify_ktf_commutative(
      E, qf_diagonal(E, std::vector<TotalElement>{E.generator()}), alpha);
  CHECK(b.pass);
  CHECK(b.lhs == 0);

  RelativeEtale C = rational_extension({1, 0, 1});
  KtfReport c = verify_ktf_commutative(
      C, qf_diagonal(C, std::vector<TotalElement>{C.one()}), alpha);
  CHECK(c.pass);
  CHECK(c.lhs == 0);
  CHECK(c.r == 0);
}

TEST_CASE("verify_ktf_hermitian on the worked examples") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  RelativeEtale E = rational_extension({-2, 0, 1});
  TransferContext ctx(alg_quaternion(Q), E);
  ReferenceForm eta = find_reference_form(ctx.algebra);

  KtfReport a = verify_ktf_hermitian(
      ctx, central_diag(ctx.extended, {E.one()}), alpha, eta);
  CHECK(a.pass);
  CHECK(a.lhs == 2);
  CHECK(a.per_gamma == std::vector<int>{1, 1});

  KtfReport b = verify_ktf_hermitian(
      ctx, central_diag(ctx.extended, {E.generator()}), alpha, eta);
  CHECK(b.pass);
  CHECK(b.lhs == 0);
  CHECK((b.per_gamma == std::vector<int>{1, -1} ||
         b.per_gamma == std::vector<int>{-1, 1}));
}

TEST_CASE("hermitian trace formula on a randomized corpus") {
  std::mt19937_64 rng(24601);
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  int done = 0;
  while (done < 40) {
    int deg = 1 + static_cast<int>(rng() % 4);
    std::vector<EtaleElement> f;
    for (int j = 0; j < deg; ++j)
      f.push_back(Q.from_int(static_cast<long long>(rng() % 9) - 4));
    f.push_back(Q.one());
    try {
      RelativeEtale E(Q, f);
      InvolutiveAlgebra A = [&]() -> InvolutiveAlgebra {
        switch (done % 5) {
          case 0: return alg_base_id(Q);
          case 1: return alg_m2_transpose(Q);
          case 2: return alg_m2_symplectic(Q);
          case 3: return alg_quaternion(Q);
          default: return alg_unitary(Q, Q.from_int(-1));
        }
      }();
      TransferContext ctx(A, E);
      ReferenceForm eta = find_reference_form(A);
      std::vector<TotalElement> entries;
      int dim = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < dim; ++i) entries.push_back(random_unit(E, rng));
      RelHermForm h = central_diag(ctx.extended, entries);
      KtfReport rep = verify_ktf_hermitian(ctx, h, alpha, eta);
      CAPTURE(done);
      CHECK(rep.pass);
      ++done;
    } catch (const std::domain_error&) {
      // inseparable extension draw; retry
    }
  }
}

TEST_CASE("transfer preserves nonsingularity and hyperbolicity") {
  std::mt19937_64 rng(1999);
  EtaleAlgebra Q = rationals();
  int done = 0;
  while (done < 10) {
    int deg = 2 + static_cast<int>(rng() % 2);
    std::vector<EtaleElement> f;
    for (int j = 0; j < deg; ++j)
      f.push_back(Q.from_int(static_cast<long long>(rng() % 7) - 3));
    f.push_back(Q.one());
    try {
      RelativeEtale E(Q, f);
      TransferContext ctx(alg_quaternion(Q), E);
      RelHermForm h = central_diag(ctx.extended, {random_unit(E, rng)});
      CHECK(nonsingular(h));
      HermForm tr = transfer_hermitian(ctx, h);
      CHECK(nonsingular(tr));

      RelHermForm hyp = hyperbolic_herm(1, ctx.extended, 1);
      HermForm trh = transfer_hermitian(ctx, hyp);
      CHECK(herm_hyperbolic_certified(trh));
      ReferenceForm eta = find_reference_form(ctx.algebra);
      TotalSignature t = total_signature(trh, eta);
      for (int v : t.values) CHECK(v == 0);
      ++done;
    } catch (const std::domain_error&) {
    }
  }
}

TEST_CASE("extension counting matches the transferred unit form") {
  std::mt19937_64 rng(6174);
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  int done = 0;
  long long total_extensions = 0;
  while (done < 30) {
    int deg = 1 + static_cast<int>(rng() % 4);
    std::vector<EtaleElement> f;
    for (int j = 0; j < deg; ++j)
      f.push_back(Q.from_int(static_cast<long long>(rng() % 9) - 4));
    f.push_back(Q.one());
    try {
      RelativeEtale E(Q, f);
      TransferContext ctx(alg_quaternion(Q), E);
      ReferenceForm eta = find_reference_form(ctx.algebra);
      ExtendNilReport rep = verify_extend_nil(ctx, alpha, eta, 10, rng());
      CHECK(rep.pass);
      CHECK(rep.count_matches);
      // Over the rational base the real extensions are the real roots.
      std::vector<EtaleElement> coeffs = E.rel_poly();
      UniPoly fq;
      for (const auto& c : coeffs) fq.push_back(c.parts[0].empty() ? Rational(0) : c.parts[0][0]);
      fq = poly_normalize(RationalField{}, std::move(fq));
      CHECK(rep.r == count_real_roots(fq, Bound::neg_inf(), Bound::pos_inf()));
      total_extensions += rep.r;
      ++done;
    } catch (const std::domain_error&) {
    }
  }
  CHECK(total_extensions > 0);
}

TEST_CASE("complex factors contribute nothing to transferred signatures") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  // (x^2 - 2)(x^2 + 1) as the squarefree quartic x^4 - x^2 - 2.
  RelativeEtale E = rational_extension({-2, 0, -1, 0, 1});
  TransferContext ctx(alg_quaternion(Q), E);
  ReferenceForm eta = find_reference_form(ctx.algebra);
  SplitReport split = split_at(ctx, alpha);
  CHECK(split.r == 2);
  CHECK(split.t == 4);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 5; ++i) {
    RelHermForm h = central_diag(ctx.extended, {random_unit(E, rng)});
    CHECK(zero_plus_weakly_hyperbolic_check(ctx, h, alpha, eta));
  }

  // Purely complex extension: the transferred signature vanishes outright.
  RelativeEtale C = rational_extension({1, 0, 1});
  TransferContext cctx(alg_quaternion(Q), C);
  RelHermForm h = central_diag(cctx.extended, {C.one()});
  CHECK(zero_plus_weakly_hyperbolic_check(cctx, h, alpha, eta));
  CHECK(eta_signature(transfer_hermitian(cctx, h), alpha, eta) == 0);
}

TEST_CASE("nil orderings give zero on both sides of the formula") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  RelativeEtale E = rational_extension({-2, 0, 1});
  TransferContext ctx(alg_m2_symplectic(Q), E);  // nil everywhere
  ReferenceForm eta = find_reference_form(ctx.algebra);
  RelHermForm h = central_diag(ctx.extended, {E.one(), E.generator()});
  KtfReport rep = verify_ktf_hermitian(ctx, h, alpha, eta);
  CHECK(rep.pass);
  CHECK(rep.lhs == 0);
  CHECK(rep.rhs == 0);
}
