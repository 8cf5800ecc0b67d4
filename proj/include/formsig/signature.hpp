#pragma once

// Signatures of hermitian forms at orderings. The fixed Morita choice is
// the reduction to the division level followed by diagonal sign counting;
// the same engine instance serves every formula, which is all the
// consistency the theory requires. Reference forms pin the global sign,
// eta-signatures and total signatures follow, and the 2-power reference
// form is built from per-ordering localizers.

#include "formsig/morita.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace formsig {

struct SearchError : std::runtime_error {
  explicit SearchError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Hermitian elimination of a Gram matrix over (D, theta) at an ordering:
// congruence by matrices invertible at the ordering, multiplications only.
// Pivots are the (structurally central) diagonal entries; a vanishing
// diagonal is repaired with v_i <- v_i + v_j * e_t for a D-basis element
// e_t whose reduced trace against g_ij does not vanish at the ordering.
// Returns the base coordinates of the final diagonal.
template <class B>
std::vector<typename B::Elem> herm_eliminate_at(const InvAlgebraT<B>& D1,
                                                Mat<DElemT<B>> g,
                                                const typename B::Ord& ord) {
  const auto& K = D1.base();
  const int n = g.rows;
  const int dd = D1.d_dim();

  auto value_zero = [&](const typename B::Elem& x) {
    return K.is_zero_at(x, ord);
  };
  auto col_mul_add = [&](int dst, int src, const DElemT<B>& c) {
    // col_dst += col_src * c; then row_dst += conj(c) * row_src.
    for (int t = 0; t < n; ++t)
      g.at(t, dst) = D1.dadd(g.at(t, dst), D1.dmul(g.at(t, src), c));
    DElemT<B> cc = D1.dconj(c);
    for (int t = 0; t < n; ++t)
      g.at(dst, t) = D1.dadd(g.at(dst, t), D1.dmul(cc, g.at(src, t)));
  };
  auto swap_basis = [&](int a, int b) {
    if (a == b) return;
    for (int t = 0; t < n; ++t) std::swap(g.at(t, a), g.at(t, b));
    for (int t = 0; t < n; ++t) std::swap(g.at(a, t), g.at(b, t));
  };

  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!value_zero(g.at(i, i).c[0])) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      // Repair a diagonal from an off-diagonal entry.
      int pi = -1, pj = -1, pt = -1;
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n && pi < 0; ++j)
          for (int t = 0; t < dd; ++t)
            if (!value_zero(g.at(i, j).c[static_cast<std::size_t>(t)])) {
              pi = i;
              pj = j;
              pt = t;
              break;
            }
      if (pi < 0) break;  // remaining block vanishes at the ordering
      DElemT<B> basis = D1.dzero();
      basis.c[static_cast<std::size_t>(pt)] = K.one();
      col_mul_add(pi, pj, basis);
      pivot = pi;
    }
    swap_basis(k, pivot);
    const DElemT<B> p = g.at(k, k);  // central and symmetric
    for (int j = k + 1; j < n; ++j) {
      const DElemT<B> c = g.at(k, j);
      if (D1.dis_zero(c)) continue;
      // v_j <- v_j * p - v_k * c.
      for (int t = 0; t < n; ++t)
        g.at(t, j) = D1.dsub(D1.dmul(g.at(t, j), p), D1.dmul(g.at(t, k), c));
      DElemT<B> pc = D1.dconj(p);
      DElemT<B> cc = D1.dconj(c);
      for (int t = 0; t < n; ++t)
        g.at(j, t) = D1.dsub(D1.dmul(pc, g.at(j, t)), D1.dmul(cc, g.at(k, t)));
    }
    // Keep coefficients small: strip positive rational content per row.
    for (int j = k + 1; j < n; ++j) {
      Rational lam(0);
      for (int t = 0; t < n; ++t)
        for (const auto& x : g.at(j, t).c) lam = rational_gcd(lam, K.content(x));
      if (!lam.is_zero() && lam != 1) {
        typename B::Elem s = K.from_rational(1 / lam);
        for (int t = 0; t < n; ++t) {
          for (auto& x : g.at(j, t).c) x = K.mul(x, s);
          for (auto& x : g.at(t, j).c) x = K.mul(x, s);
        }
      }
    }
  }
  std::vector<typename B::Elem> diag;
  for (int i = 0; i < n; ++i) diag.push_back(g.at(i, i).c[0]);
  return diag;
}

}  // namespace detail

// M-signature of h at an ordering: 0 on the nil set; otherwise reduce to
// the division level, normalize epsilon, and count diagonal signs.
template <class B>
int m_signature(const HermFormT<B>& h, const typename B::Ord& ord) {
  const auto& A = h.algebra;
  if (A.is_nil_at(ord)) return 0;
  HermFormT<B> r = reduce_to_division(h);
  Mat<DElemT<B>> g(r.dim(), r.dim(), r.algebra.dzero());
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j) g.at(i, j) = r.gram.at(i, j).at(0, 0);

  if (r.epsilon == -1) {
    switch (A.kind()) {
      case DivisionKind::Base:
        // Alternating bilinear forms have zero signature.
        return 0;
      case DivisionKind::Quadratic: {
        // Multiply by sqrt(d): a fixed choice turning skew-hermitian into
        // hermitian over the quadratic extension.
        DElemT<B> s = r.algebra.dzero();
        s.c[1] = A.base().one();
        for (auto& e : g.a) e = r.algebra.dmul(s, e);
        break;
      }
      case DivisionKind::Quaternion:
        throw std::domain_error(
            "signature of a skew twist over a quaternion algebra at a split "
            "ordering is outside the implemented classification");
    }
  }

  int sig = 0;
  for (const auto& d : detail::herm_eliminate_at(r.algebra, std::move(g), ord))
    sig += A.base().sign_at(d, ord);
  return sig;
}

// A reference form together with its cached signature signs per ordering.
struct ReferenceForm {
  HermForm form;
  std::vector<int> m_signs;  // aligned with base().orderings(); 0 on nil

  static ReferenceForm wrap(HermForm f);
};

struct SearchBudget {
  int height = 8;       // scalar candidates up to this absolute value
  int pfister_len = 3;  // maximal Pfister length for localizers
  int max_m = 6;        // exponent bound for two-power matching
};

// Pfister entries that are positive at the given ordering and negative
// somewhere at every other ordering of the algebra; empty when there is
// only one ordering. All entries are units.
std::vector<EtaleElement> ordering_localizer(const EtaleAlgebra& K,
                                             int target_index);

// A diagonal form with nonzero M-signature at every non-nil ordering.
// Throws SearchError with a report when the budgeted search is exhausted.
ReferenceForm find_reference_form(const InvolutiveAlgebra& A,
                                  const SearchBudget& budget = {});

int eta_signature(const HermForm& h, const Ordering& ord,
                  const ReferenceForm& eta);

// Extension-level eta-signature with the extended reference form.
int eta_signature_rel(const RelHermForm& h, const RelOrdering& ord,
                      const RelHermForm& eta_extended);

struct TotalSignature {
  std::vector<int> values;  // aligned with base().orderings()

  bool operator==(const TotalSignature& o) const { return values == o.values; }
};

TotalSignature total_signature(const HermForm& h, const ReferenceForm& eta);

struct TwoPowerForm {
  HermForm form;
  int exponent;  // |total signature| is 2^exponent off the nil set
};

TwoPowerForm find_two_power_form(const InvolutiveAlgebra& A,
                                 const ReferenceForm& eta,
                                 const SearchBudget& budget = {});

struct TwoPowerMatch {
  bool found = false;
  int exponent = 0;
  std::optional<HermForm> form;
  std::string failure;
};

// Finds m <= budget.max_m and h with total signature exactly 2^m * f.
TwoPowerMatch two_power_multiple_match(const TotalSignature& f,
                                       const InvolutiveAlgebra& A,
                                       const ReferenceForm& eta,
                                       const SearchBudget& budget = {});

}  // namespace formsig
