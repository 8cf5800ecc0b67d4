#include "doctest.h"
#include "builders.hpp"
#include "formsig/signature.hpp"

#include <random>

using namespace formsig;
using namespace formsig::testing;

namespace {

UniPoly P(std::initializer_list<long long> cs) { return unipoly_from_ints(cs); }
EtaleAlgebra rationals() { return EtaleAlgebra::rationals(); }
EtaleAlgebra sqrt2_field() { return EtaleAlgebra({P({-2, 0, 1})}); }

HermForm random_diag(const InvolutiveAlgebra& A, int dim, std::mt19937_64& rng) {
  std::vector<AlgElemT<EtaleAlgebra>> d;
  while (static_cast<int>(d.size()) < dim) {
    long long v = static_cast<long long>(rng() % 11) - 5;
    if (v == 0) continue;
    d.push_back(A.scalar_int(v));
  }
  return diagonal_form(A, d);
}

QuadForm random_quad(const EtaleAlgebra& K, int dim, std::mt19937_64& rng) {
  std::vector<EtaleElement> d;
  while (static_cast<int>(d.size()) < dim) {
    long long v = static_cast<long long>(rng() % 7) - 3;
    if (v == 0) continue;
    d.push_back(K.from_int(v));
  }
  return qf_diagonal(K, d);
}

std::vector<InvolutiveAlgebra> corpus_algebras() {
  EtaleAlgebra Q = rationals();
  EtaleAlgebra K = sqrt2_field();
  return {alg_base_id(Q),
          alg_m2_transpose(Q),
          alg_m2_symplectic(Q),
          alg_quaternion(Q),
          alg_unitary(Q, Q.from_int(-1)),
          alg_base_id(K),
          alg_quaternion(K),
          alg_unitary(K, K.neg(K.generator()))};
}

}  // namespace

TEST_CASE("m_signature on the worked examples") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  CHECK(m_signature(int_diag_form(alg_quaternion(Q), {1}), alpha) == 1);
  CHECK(m_signature(int_diag_form(alg_m2_transpose(Q), {1}), alpha) == 2);
  for (const auto& A : corpus_algebras())
    for (const auto& ord : A.base().orderings())
      CHECK(m_signature(hyperbolic_herm(1, A, 1), ord) == 0);
}

TEST_CASE("m_signature vanishes exactly on the nil set for units") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  CHECK(m_signature(int_diag_form(alg_m2_symplectic(Q), {1}), alpha) == 0);
  CHECK(m_signature(int_diag_form(alg_quaternion(Q, 1, -1), {1}), alpha) == 0);
  EtaleAlgebra K = sqrt2_field();
  InvolutiveAlgebra U = alg_unitary(K, K.neg(K.generator()));
  HermForm h = int_diag_form(U, {1});
  CHECK(m_signature(h, K.orderings()[1]) == 1);  // unitary side
  CHECK(m_signature(h, K.orderings()[0]) == 0);  // split side
}

TEST_CASE("m-signature of rank-one forms is bounded by the reduced size") {
  std::mt19937_64 rng(808);
  for (const auto& A : corpus_algebras()) {
    for (int t = 0; t < 10; ++t) {
      HermForm h = random_diag(A, 1, rng);
      for (const auto& ord : A.base().orderings())
        CHECK(std::abs(m_signature(h, ord)) <= A.n());
    }
  }
}

TEST_CASE("find_reference_form on the template algebras") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);

  ReferenceForm r1 = find_reference_form(alg_m2_transpose(Q));
  CHECK(std::abs(r1.m_signs[0]) == 2);

  ReferenceForm r2 = find_reference_form(alg_quaternion(Q));
  CHECK(std::abs(r2.m_signs[0]) == 1);

  // Unitary with nil everywhere: the requirement is vacuous.
  EtaleAlgebra K = sqrt2_field();
  InvolutiveAlgebra split_only = alg_unitary(Q, Q.from_int(2));
  ReferenceForm r3 = find_reference_form(split_only);
  CHECK(nonsingular(r3.form));
  CHECK(r3.m_signs[0] == 0);

  // Twisted orthogonal with an indefinite twist still gets a reference.
  InvolutiveAlgebra probe = alg_base_id(K, 1);
  Mat<DElemT<EtaleAlgebra>> u(2, 2, probe.dzero());
  u.at(0, 0) = probe.done();
  u.at(1, 1) = DElemT<EtaleAlgebra>{{K.neg(K.generator())}};
  InvolutiveAlgebra twisted(K, 2, DivisionKind::Base, K.zero(), K.zero(),
                            K.zero(), StandardInv::Transpose, u);
  ReferenceForm r4 = find_reference_form(twisted);
  for (std::size_t i = 0; i < K.orderings().size(); ++i)
    CHECK(r4.m_signs[i] != 0);
  (void)alpha;
}

TEST_CASE("eta_signature conventions") {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  InvolutiveAlgebra A = alg_m2_transpose(Q);
  ReferenceForm eta = find_reference_form(A);
  CHECK(eta_signature(eta.form, alpha, eta) > 0);
  CHECK(eta_signature(herm_neg(eta.form), alpha, eta) ==
        -eta_signature(eta.form, alpha, eta));

  InvolutiveAlgebra B1 = alg_base_id(Q);
  ReferenceForm one = ReferenceForm::wrap(int_diag_form(B1, {1}));
  CHECK(eta_signature(int_diag_form(B1, {1, 1}), alpha, one) == 2);
}

TEST_CASE("eta_signature is additive and multiplies under quadratic tensors") {
  std::mt19937_64 rng(2024);
  int cases = 0;
  auto algebras = corpus_algebras();
  while (cases < 300) {
    const auto& A = algebras[rng() % algebras.size()];
    ReferenceForm eta = find_reference_form(A);
    HermForm h1 = random_diag(A, 1 + static_cast<int>(rng() % 3), rng);
    HermForm h2 = random_diag(A, 1 + static_cast<int>(rng() % 3), rng);
    QuadForm q = random_quad(A.base(), 1 + static_cast<int>(rng() % 2), rng);
    for (const auto& ord : A.base().orderings()) {
      CHECK(eta_signature(orth_sum(h1, h2), ord, eta) ==
            eta_signature(h1, ord, eta) + eta_signature(h2, ord, eta));
      CHECK(eta_signature(q_tensor_h(q, h1), ord, eta) ==
            signature_at(q, ord) * eta_signature(h1, ord, eta));
    }
    ++cases;
  }
}

TEST_CASE("eta_signature vanishes identically on the nil set") {
  std::mt19937_64 rng(3030);
  for (const auto& A : corpus_algebras()) {
    ReferenceForm eta = find_reference_form(A);
    for (int t = 0; t < 10; ++t) {
      HermForm h = random_diag(A, 1 + static_cast<int>(rng() % 3), rng);
      const auto& ords = A.base().orderings();
      for (std::size_t i = 0; i < ords.size(); ++i)
        if (A.is_nil_at(ords[i])) CHECK(eta_signature(h, ords[i], eta) == 0);
    }
  }
}

TEST_CASE("reference forms agree up to a per-ordering sign") {
  std::mt19937_64 rng(4040);
  EtaleAlgebra K = sqrt2_field();
  InvolutiveAlgebra A = alg_base_id(K);
  ReferenceForm eta1 = ReferenceForm::wrap(int_diag_form(A, {1}));
  // A second valid reference form with a different sign pattern.
  std::vector<AlgElemT<EtaleAlgebra>> d{A.scalar(K.generator())};
  ReferenceForm eta2 = ReferenceForm::wrap(diagonal_form(A, d));
  const auto& ords = K.orderings();
  for (int t = 0; t < 20; ++t) {
    HermForm h = random_diag(A, 1 + static_cast<int>(rng() % 3), rng);
    for (std::size_t i = 0; i < ords.size(); ++i) {
      int lhs = eta_signature(h, ords[i], eta1);
      int ref = eta2.m_signs[i] == 0 ? 0 : (eta_signature(eta1.form, ords[i], eta2) > 0 ? 1 : -1);
      CHECK(lhs == ref * eta_signature(h, ords[i], eta2));
    }
  }
}

TEST_CASE("total_signature on the worked examples") {
  EtaleAlgebra K = sqrt2_field();
  InvolutiveAlgebra A = alg_base_id(K);
  ReferenceForm eta = ReferenceForm::wrap(int_diag_form(A, {1}));

  std::vector<AlgElemT<EtaleAlgebra>> d{A.identity(), A.scalar(K.generator())};
  HermForm h = diagonal_form(A, d);  // <1, sqrt 2>
  TotalSignature t = total_signature(h, eta);
  REQUIRE(t.values.size() == 2);
  CHECK(t.values[0] == 0);  // at -sqrt2
  CHECK(t.values[1] == 2);  // at +sqrt2

  TotalSignature th = total_signature(hyperbolic_herm(2, A, 1), eta);
  CHECK(th.values == std::vector<int>{0, 0});

  // q tensor h has the pointwise product of totals.
  std::mt19937_64 rng(5050);
  for (int trial = 0; trial < 10; ++trial) {
    HermForm hr = random_diag(A, 2, rng);
    QuadForm q = random_quad(K, 2, rng);
    TotalSignature lhs = total_signature(q_tensor_h(q, hr), eta);
    TotalSignature rhs = total_signature(hr, eta);
    const auto& ords = K.orderings();
    for (std::size_t i = 0; i < ords.size(); ++i)
      CHECK(lhs.values[i] == signature_at(q, ords[i]) * rhs.values[i]);
  }
}

TEST_CASE("find_two_power_form on the acceptance instances") {
  EtaleAlgebra Q = rationals();
  EtaleAlgebra K = sqrt2_field();

  SUBCASE("rational base, rank one") {
    InvolutiveAlgebra A = alg_base_id(Q);
    ReferenceForm eta = find_reference_form(A);
    TwoPowerForm tp = find_two_power_form(A, eta);
    CHECK(tp.exponent == 0);
    CHECK(nonsingular(tp.form));
  }
  SUBCASE("quaternions over the rationals") {
    InvolutiveAlgebra A = alg_quaternion(Q);
    ReferenceForm eta = find_reference_form(A);
    TwoPowerForm tp = find_two_power_form(A, eta);
    CHECK(tp.exponent == 0);
  }
  SUBCASE("2 x 2 matrices with the transpose") {
    InvolutiveAlgebra A = alg_m2_transpose(Q);
    ReferenceForm eta = find_reference_form(A);
    TwoPowerForm tp = find_two_power_form(A, eta);
    CHECK(tp.exponent == 1);
  }
  SUBCASE("real quadratic base") {
    InvolutiveAlgebra A = alg_base_id(K);
    ReferenceForm eta = find_reference_form(A);
    TwoPowerForm tp = find_two_power_form(A, eta);
    TotalSignature t = total_signature(tp.form, eta);
    for (int v : t.values) CHECK(std::abs(v) == (1 << tp.exponent));
    CHECK(nonsingular(tp.form));
  }
  SUBCASE("nil-everywhere algebras are vacuous") {
    InvolutiveAlgebra A = alg_m2_symplectic(Q);
    ReferenceForm eta = find_reference_form(A);
    TwoPowerForm tp = find_two_power_form(A, eta);
    CHECK(tp.exponent == 0);
    CHECK(nonsingular(tp.form));
  }
}

TEST_CASE("two_power_multiple_match") {
  EtaleAlgebra K = sqrt2_field();
  InvolutiveAlgebra A = alg_base_id(K);
  ReferenceForm eta = ReferenceForm::wrap(int_diag_form(A, {1}));

  SUBCASE("zero total matches hyperbolically") {
    TwoPowerMatch m = two_power_multiple_match(TotalSignature{{0, 0}}, A, eta);
    REQUIRE(m.found);
    CHECK(m.exponent == 0);
    TotalSignature t = total_signature(*m.form, eta);
    CHECK(t.values == std::vector<int>{0, 0});
  }
  SUBCASE("an indicator total") {
    TwoPowerMatch m = two_power_multiple_match(TotalSignature{{0, 1}}, A, eta);
    REQUIRE(m.found);
    CHECK(m.exponent <= 1);
    TotalSignature t = total_signature(*m.form, eta);
    CHECK(t.values[0] == 0);
    CHECK(t.values[1] == (1 << m.exponent));
  }
  SUBCASE("a mixed-sign total") {
    TwoPowerMatch m = two_power_multiple_match(TotalSignature{{-1, 2}}, A, eta);
    REQUIRE(m.found);
    TotalSignature t = total_signature(*m.form, eta);
    CHECK(t.values[0] == -(1 << m.exponent));
    CHECK(t.values[1] == 2 * (1 << m.exponent));
  }
  SUBCASE("rejects totals that fail to vanish on the nil set") {
    EtaleAlgebra Q = rationals();
    InvolutiveAlgebra S = alg_m2_symplectic(Q);
    ReferenceForm etas = find_reference_form(S);
    CHECK_THROWS_AS(two_power_multiple_match(TotalSignature{{1}}, S, etas),
                    std::domain_error);
  }
}
