#include "formsig/acceptance.hpp"

#include "formsig/oracle.hpp"
#include "formsig/scenario.hpp"
#include "formsig/transfer.hpp"

#include <random>
#include <sstream>

namespace formsig {

namespace {

EtaleAlgebra rationals() { return EtaleAlgebra::rationals(); }

EtaleAlgebra sqrt2_field() {
  return EtaleAlgebra({unipoly_from_ints({-2, 0, 1})});
}

InvolutiveAlgebra template_algebra(const EtaleAlgebra& K, int which) {
  switch (which) {
    case 0:
      return InvolutiveAlgebra::with_identity_twist(
          K, 1, DivisionKind::Base, K.zero(), K.zero(), K.zero(),
          StandardInv::Transpose);
    case 1:
      return InvolutiveAlgebra::with_identity_twist(
          K, 2, DivisionKind::Base, K.zero(), K.zero(), K.zero(),
          StandardInv::Transpose);
    case 2: {
      InvolutiveAlgebra probe = InvolutiveAlgebra::with_identity_twist(
          K, 1, DivisionKind::Base, K.zero(), K.zero(), K.zero(),
          StandardInv::Transpose);
      Mat<DElemT<EtaleAlgebra>> u(2, 2, probe.dzero());
      u.at(0, 1) = probe.done();
      u.at(1, 0) = probe.dneg(probe.done());
      return InvolutiveAlgebra(K, 2, DivisionKind::Base, K.zero(), K.zero(),
                               K.zero(), StandardInv::Transpose, std::move(u));
    }
    case 3:
      return InvolutiveAlgebra::with_identity_twist(
          K, 1, DivisionKind::Quaternion, K.zero(), K.from_int(-1),
          K.from_int(-1), StandardInv::ConjTranspose);
    default:
      return InvolutiveAlgebra::with_identity_twist(
          K, 1, DivisionKind::Quadratic, K.from_int(-1), K.zero(), K.zero(),
          StandardInv::ConjTranspose);
  }
}

HermForm scalar_diag(const InvolutiveAlgebra& A, std::vector<long long> d) {
  std::vector<AlgElemT<EtaleAlgebra>> entries;
  for (long long v : d) entries.push_back(A.scalar_int(v));
  return diagonal_form(A, entries);
}

HermForm random_scalar_diag(const InvolutiveAlgebra& A, int dim,
                            std::mt19937_64& rng) {
  std::vector<long long> d;
  while (static_cast<int>(d.size()) < dim) {
    long long v = static_cast<long long>(rng() % 9) - 4;
    if (v != 0) d.push_back(v);
  }
  return scalar_diag(A, d);
}

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

// ---- criterion 1: the hermitian trace formula ---------------------------

CriterionResult criterion_hermitian_ktf() {
  std::vector<Scenario> corpus = corpus_generate(1, 100);
  int instances = 0, equal = 0;
  for (const auto& s : corpus) {
    TransferContext ctx(*s.algebra, *s.extension);
    ReferenceForm eta = find_reference_form(*s.algebra);
    RelHermForm h = central_diag(ctx.extended, s.extended_forms.front().entries);
    for (const auto& alpha : s.base->orderings()) {
      KtfReport rep = verify_ktf_hermitian(ctx, h, alpha, eta);
      ++instances;
      if (rep.pass) ++equal;
    }
  }
  std::ostringstream detail;
  detail << equal << "/" << instances << " instances equal";
  return {1, "hermitian trace formula", instances >= 100 &&
                                                     equal == instances,
          detail.str()};
}

// ---- criterion 2: the commutative trace formula --------------------------

CriterionResult criterion_commutative_ktf() {
  std::mt19937_64 rng(2);
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  int instances = 0, equal = 0;
  while (instances < 100) {
    int deg = 1 + static_cast<int>(rng() % 4);
    std::vector<EtaleElement> f;
    for (int j = 0; j < deg; ++j)
      f.push_back(Q.from_int(static_cast<long long>(rng() % 19) - 9));
    f.push_back(Q.one());
    try {
      RelativeEtale E(Q, f);
      std::vector<TotalElement> d;
      int dim = 1 + static_cast<int>(rng() % 3);
      while (static_cast<int>(d.size()) < dim) {
        std::vector<EtaleElement> cs;
        for (int j = 0; j < deg; ++j)
          cs.push_back(Q.from_int(static_cast<long long>(rng() % 11) - 5));
        TotalElement e = E.from_coeffs(cs);
        if (E.is_unit(e)) d.push_back(e);
      }
      KtfReport rep = verify_ktf_commutative(E, qf_diagonal(E, d), alpha);
      ++instances;
      if (rep.pass) ++equal;
    } catch (const std::domain_error&) {
    }
  }
  std::ostringstream detail;
  detail << equal << "/" << instances << " instances equal";
  return {2, "commutative trace formula with unit multiplicities",
          equal == instances, detail.str()};
}

// ---- criterion 3: extension counting -------------------------------------

CriterionResult criterion_extension_counting() {
  EtaleAlgebra Q = rationals();
  auto alpha = Q.orderings().at(0);
  InvolutiveAlgebra A = template_algebra(Q, 0);
  int checked = 0;
  bool ok = true;
  std::ostringstream detail;

  auto named = [&](std::initializer_list<long long> poly, long expect) {
    std::vector<EtaleElement> f;
    for (long long c : poly) f.push_back(Q.from_int(c));
    TransferContext ctx(A, RelativeEtale(Q, f));
    SplitReport split = split_at(ctx, alpha);
    RelQuadForm unit =
        qf_diagonal(ctx.extension, std::vector<TotalElement>{ctx.extension.one()});
    int sig = signature_at(transfer_quadratic(ctx.extension, unit), alpha);
    ++checked;
    if (split.r != expect || sig != expect) {
      ok = false;
      detail << "named case failed (expected " << expect << ", r=" << split.r
             << ", sig=" << sig << "); ";
    }
  };
  named({-2, 0, 1}, 2);
  named({1, 0, 1}, 0);
  named({0, -1, 0, 1}, 3);
  named({-2, 0, -1, 0, 1}, 2);

  std::mt19937_64 rng(3);
  while (checked < 30) {
    int deg = 1 + static_cast<int>(rng() % 4);
    std::vector<EtaleElement> f;
    for (int j = 0; j < deg; ++j)
      f.push_back(Q.from_int(static_cast<long long>(rng() % 19) - 9));
    f.push_back(Q.one());
    try {
      RelativeEtale E(Q, f);
      TransferContext ctx(A, E);
      SplitReport split = split_at(ctx, alpha);
      RelQuadForm unit = qf_diagonal(E, std::vector<TotalElement>{E.one()});
      int sig = signature_at(transfer_quadratic(E, unit), alpha);
      ++checked;
      if (sig != split.r) ok = false;
    } catch (const std::domain_error&) {
    }
  }
  detail << checked << " extensions checked";
  return {3, "extension counting via the transferred unit form", ok,
          detail.str()};
}

// ---- criterion 4: Pfister signatures --------------------------------------

CriterionResult criterion_pfister() {
  std::mt19937_64 rng(4);
  std::vector<EtaleAlgebra> bases{rationals(), sqrt2_field(),
                                  etale_product(sqrt2_field(), rationals())};
  bool ok = true;
  int checked = 0;
  for (const auto& K : bases) {
    for (int k = 0; k <= 3; ++k) {
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<EtaleElement> b;
        while (static_cast<int>(b.size()) < k) {
          std::vector<UniPoly> parts;
          for (int f = 0; f < K.factor_count(); ++f) {
            UniPoly p{Rational(static_cast<long long>(rng() % 9) - 4),
                      Rational(static_cast<long long>(rng() % 5) - 2)};
            parts.push_back(poly_normalize(RationalField{}, std::move(p)));
          }
          EtaleElement e = K.from_parts(parts);
          if (K.is_unit(e)) b.push_back(e);
        }
        QuadForm pf = pfister(K, b);
        for (const auto& alpha : K.orderings()) {
          bool all_positive = true;
          for (const auto& e : b)
            if (K.sign_at(e, alpha) < 0) all_positive = false;
          int expect = all_positive ? (1 << k) : 0;
          if (signature_at(pf, alpha) != expect) ok = false;
          ++checked;
        }
      }
    }
  }
  std::ostringstream detail;
  detail << checked << " (form, ordering) pairs";
  return {4, "Pfister form signatures", ok && checked > 0, detail.str()};
}

// ---- criterion 5: Morita invariance ---------------------------------------

CriterionResult criterion_morita() {
  std::mt19937_64 rng(5);
  EtaleAlgebra Q = rationals();
  EtaleAlgebra K = sqrt2_field();

  std::vector<MoritaContext> ctxs;
  ctxs.emplace_back(template_algebra(Q, 1), template_algebra(Q, 0));
  ctxs.emplace_back(template_algebra(Q, 0), template_algebra(Q, 1));
  ctxs.emplace_back(
      template_algebra(Q, 3),
      InvolutiveAlgebra::with_identity_twist(Q, 2, DivisionKind::Quaternion,
                                             Q.zero(), Q.from_int(-1),
                                             Q.from_int(-1),
                                             StandardInv::ConjTranspose));
  ctxs.emplace_back(template_algebra(K, 1), template_algebra(K, 0));
  ctxs.emplace_back(
      InvolutiveAlgebra::with_identity_twist(K, 1, DivisionKind::Quadratic,
                                             K.neg(K.generator()), K.zero(),
                                             K.zero(), StandardInv::ConjTranspose),
      InvolutiveAlgebra::with_identity_twist(K, 2, DivisionKind::Quadratic,
                                             K.neg(K.generator()), K.zero(),
                                             K.zero(), StandardInv::ConjTranspose));

  int triples = 0, equal = 0;
  for (const auto& ctx : ctxs) {
    ReferenceForm eta = find_reference_form(ctx.source);
    HermForm eta_padded =
        herm_repeat(eta.form, copies_for_target(ctx, eta.form));
    ReferenceForm feta = ReferenceForm::wrap(functor_F(ctx, eta_padded));
    for (int t = 0; t < 12; ++t) {
      HermForm h = random_scalar_diag(ctx.source, 2 * ctx.target.n(), rng);
      HermForm fh = functor_F(ctx, h);
      for (const auto& alpha : ctx.source.base().orderings()) {
        ++triples;
        if (eta_signature(h, alpha, eta) == eta_signature(fh, alpha, feta))
          ++equal;
      }
    }
  }

  // The extension square at the signature level.
  RelativeEtale E(Q, {Q.from_int(-2), Q.zero(), Q.one()});
  int squares = 0, commuting = 0;
  std::vector<MoritaContext> sq_ctxs;
  sq_ctxs.emplace_back(template_algebra(Q, 1), template_algebra(Q, 0));
  sq_ctxs.emplace_back(
      template_algebra(Q, 3),
      InvolutiveAlgebra::with_identity_twist(Q, 2, DivisionKind::Quaternion,
                                             Q.zero(), Q.from_int(-1),
                                             Q.from_int(-1),
                                             StandardInv::ConjTranspose));
  for (const auto& ctx : sq_ctxs) {
    HermForm eta = find_reference_form(ctx.source).form;
    for (int t = 0; t < 10; ++t) {
      HermForm h = random_scalar_diag(ctx.source, 2 * ctx.target.n(), rng);
      BrcomReport rep = check_brcom_square(ctx, E, h, eta);
      ++squares;
      if (rep.commutes) ++commuting;
    }
  }

  std::ostringstream detail;
  detail << equal << "/" << triples << " triples, " << commuting << "/"
         << squares << " commuting squares";
  return {5, "Morita invariance and the extension square",
          triples >= 50 && equal == triples && squares >= 20 &&
              commuting == squares,
          detail.str()};
}

// ---- criterion 6: ring-morphism properties --------------------------------

CriterionResult criterion_signprop() {
  std::mt19937_64 rng(6);
  EtaleAlgebra Q = rationals();
  EtaleAlgebra K = sqrt2_field();
  std::vector<InvolutiveAlgebra> algebras;
  for (int t = 0; t < 5; ++t) algebras.push_back(template_algebra(Q, t));
  algebras.push_back(template_algebra(K, 0));
  algebras.push_back(template_algebra(K, 3));

  int cases = 0;
  bool ok = true;
  while (cases < 300) {
    const auto& A = algebras[rng() % algebras.size()];
    ReferenceForm eta = find_reference_form(A);
    HermForm h1 = random_scalar_diag(A, 1 + static_cast<int>(rng() % 3), rng);
    HermForm h2 = random_scalar_diag(A, 1 + static_cast<int>(rng() % 3), rng);
    std::vector<EtaleElement> qd;
    while (qd.size() < 1 + rng() % 2) {
      long long v = static_cast<long long>(rng() % 7) - 3;
      if (v != 0) qd.push_back(A.base().from_int(v));
    }
    QuadForm q = qf_diagonal(A.base(), qd);
    for (const auto& alpha : A.base().orderings()) {
      if (eta_signature(orth_sum(h1, h2), alpha, eta) !=
          eta_signature(h1, alpha, eta) + eta_signature(h2, alpha, eta))
        ok = false;
      if (eta_signature(q_tensor_h(q, h1), alpha, eta) !=
          signature_at(q, alpha) * eta_signature(h1, alpha, eta))
        ok = false;
    }
    for (const auto& alpha : A.base().orderings())
      if (eta_signature(hyperbolic_herm(1 + static_cast<int>(rng() % 2), A, 1),
                        alpha, eta) != 0)
        ok = false;
    ++cases;
  }
  std::ostringstream detail;
  detail << cases << " random cases";
  return {6, "signature additivity, multiplicativity, hyperbolic vanishing",
          ok, detail.str()};
}

// ---- criterion 7: direct products ------------------------------------------

CriterionResult criterion_direct_products() {
  EtaleAlgebra Q = rationals();
  EtaleAlgebra K = sqrt2_field();
  bool ok = true;
  int cases = 0;

  struct Component {
    HermForm form;
    bool nonsing;
    bool hyperbolic;
  };
  auto make_components = [&](const EtaleAlgebra& base) {
    InvolutiveAlgebra A = template_algebra(base, 0);
    std::vector<Component> out;
    out.push_back({scalar_diag(A, {1}), true, false});
    out.push_back({scalar_diag(A, {0}), false, false});
    out.push_back({scalar_diag(A, {-5}), true, false});
    out.push_back({scalar_diag(A, {2, -3}), true, false});
    out.push_back({hyperbolic_herm(1, A, 1), true, true});
    out.push_back({scalar_diag(A, {1, 0}), false, false});
    return out;
  };

  auto left = make_components(Q);
  auto right = make_components(K);
  // Pair up equal-rank components across the two bases.
  for (const auto& a : left)
    for (const auto& b : right) {
      if (a.form.dim() != b.form.dim()) continue;
      HermForm prod = direct_product({a.form, b.form});
      ++cases;
      if (nonsingular(prod) != (a.nonsing && b.nonsing)) ok = false;
      if (a.hyperbolic && b.hyperbolic && !herm_hyperbolic_certified(prod))
        ok = false;
    }
  // Larger products of three components.
  for (const auto& a : left) {
    if (a.form.dim() != 1) continue;
    for (const auto& b : right) {
      if (b.form.dim() != 1) continue;
      InvolutiveAlgebra A3 = template_algebra(Q, 0);
      HermForm c = scalar_diag(A3, {5});
      HermForm prod = direct_product({a.form, b.form, c});
      ++cases;
      if (nonsingular(prod) != (a.nonsing && b.nonsing)) ok = false;
    }
  }
  std::ostringstream detail;
  detail << cases << " product cases";
  return {7, "direct products: nonsingularity and hyperbolicity", ok && cases >= 20,
          detail.str()};
}

// ---- criterion 8: two-power reference forms --------------------------------

CriterionResult criterion_two_power() {
  bool ok = true;
  std::ostringstream detail;
  EtaleAlgebra Q = rationals();
  EtaleAlgebra K = sqrt2_field();
  std::vector<InvolutiveAlgebra> algebras{
      template_algebra(Q, 0), template_algebra(Q, 3), template_algebra(Q, 1),
      template_algebra(K, 0)};
  for (const auto& A : algebras) {
    ReferenceForm eta = find_reference_form(A);
    TwoPowerForm tp = find_two_power_form(A, eta);
    // Independent verification of the claim.
    if (!nonsingular(tp.form)) ok = false;
    TotalSignature total = total_signature(tp.form, eta);
    const auto& ords = A.base().orderings();
    for (std::size_t i = 0; i < ords.size(); ++i) {
      int expect = A.is_nil_at(ords[i]) ? 0 : (1 << tp.exponent);
      if (std::abs(total.values[i]) != expect) ok = false;
    }
    detail << "m=" << tp.exponent << " ";
  }
  return {8, "two-power reference forms", ok, detail.str()};
}

// ---- criterion 9: oracle equivalence ---------------------------------------

CriterionResult criterion_oracle() {
  std::mt19937_64 rng(9);
  const RationalField qq;
  int agreed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly p;
    for (;;) {
      int deg = 1 + static_cast<int>(rng() % 6);
      p.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
      for (auto& c : p) c = Rational(static_cast<long long>(rng() % 19) - 9);
      p = poly_normalize(qq, std::move(p));
      if (poly_deg(p) >= 1 && squarefree_check(p)) break;
    }
    long sturm = count_real_roots(p, Bound::neg_inf(), Bound::pos_inf());
    long oracle = testing::oracle_count_all(p);
    if (sturm == oracle) ++agreed;
  }
  std::ostringstream detail;
  detail << agreed << "/200 counts agree";
  return {9, "Sturm counts match the bisection oracle", agreed == 200,
          detail.str()};
}

// ---- criterion 10: two-power multiples of totals ----------------------------

CriterionResult criterion_two_power_multiples() {
  EtaleAlgebra Q = rationals();
  EtaleAlgebra K = sqrt2_field();
  bool ok = true;
  int found = 0;
  std::ostringstream detail;

  auto check = [&](const InvolutiveAlgebra& A, std::vector<int> f) {
    ReferenceForm eta = find_reference_form(A);
    TwoPowerMatch m = two_power_multiple_match(TotalSignature{std::move(f)}, A, eta);
    if (m.found && m.exponent <= 6) {
      ++found;
    } else {
      ok = false;
      detail << "failure: " << m.failure << "; ";
    }
  };

  InvolutiveAlgebra AQ = template_algebra(Q, 0);
  check(AQ, {1});
  check(AQ, {3});
  check(AQ, {-2});
  InvolutiveAlgebra AK = template_algebra(K, 0);
  check(AK, {1, 0});
  check(AK, {0, 1});
  check(AK, {1, 1});
  check(AK, {2, -2});
  InvolutiveAlgebra M2 = template_algebra(Q, 1);
  check(M2, {2});
  check(M2, {4});
  InvolutiveAlgebra H = template_algebra(Q, 3);
  check(H, {1});

  detail << found << "/10 totals realized";
  return {10, "two-power multiples of prescribed totals", ok && found == 10,
          detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria() {
  std::vector<CriterionResult> out;
  out.push_back(criterion_hermitian_ktf());
  out.push_back(criterion_commutative_ktf());
  out.push_back(criterion_extension_counting());
  out.push_back(criterion_pfister());
  out.push_back(criterion_morita());
  out.push_back(criterion_signprop());
  out.push_back(criterion_direct_products());
  out.push_back(criterion_two_power());
  out.push_back(criterion_oracle());
  out.push_back(criterion_two_power_multiples());
  return out;
}

}  // namespace formsig
