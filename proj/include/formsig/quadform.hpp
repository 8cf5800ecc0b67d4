#pragma once

// Symmetric bilinear forms over an etale base (or over the total algebra of
// a relative extension), Sylvester signatures at orderings, Pfister forms,
// and the commutative trace transfer.
//
// Signatures at an ordering are computed by symmetric elimination that only
// ever multiplies (congruence by locally invertible matrices), with pivot
// decisions made by exact sign tests at the ordering. That keeps the same
// code path valid over the total algebra of an extension, where the ring is
// a product of fields that is not presented as one.

#include "formsig/etale.hpp"
#include "formsig/matrix.hpp"
#include "formsig/relative.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace formsig {

template <class B>
struct QuadFormT {
  B base;
  Mat<typename B::Elem> gram;

  int dim() const { return gram.rows; }
};

using QuadForm = QuadFormT<EtaleAlgebra>;
using RelQuadForm = QuadFormT<RelativeEtale>;

template <class B>
QuadFormT<B> qf_from_gram(const B& base, Mat<typename B::Elem> gram) {
  if (!gram.square()) throw std::domain_error("Gram matrix must be square");
  for (int i = 0; i < gram.rows; ++i)
    for (int j = 0; j < i; ++j)
      if (!base.eq(gram.at(i, j), gram.at(j, i)))
        throw std::domain_error("Gram matrix must be symmetric");
  return {base, std::move(gram)};
}

template <class B>
QuadFormT<B> qf_diagonal(const B& base, const std::vector<typename B::Elem>& d) {
  Mat<typename B::Elem> g(static_cast<int>(d.size()), static_cast<int>(d.size()),
                          base.zero());
  for (std::size_t i = 0; i < d.size(); ++i)
    g.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return {base, std::move(g)};
}

template <class B>
QuadFormT<B> qf_sum(const QuadFormT<B>& a, const QuadFormT<B>& b) {
  if (!(a.base == b.base))
    throw std::domain_error("orthogonal sum needs a common base");
  return {a.base, mat_block_diag(a.gram, b.gram, a.base.zero())};
}

template <class B>
QuadFormT<B> qf_tensor(const QuadFormT<B>& a, const QuadFormT<B>& b) {
  if (!(a.base == b.base))
    throw std::domain_error("tensor product needs a common base");
  const int n = a.dim(), m = b.dim();
  Mat<typename B::Elem> g(n * m, n * m, a.base.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          g.at(i * m + k, j * m + l) = a.base.mul(a.gram.at(i, j), b.gram.at(k, l));
  return {a.base, std::move(g)};
}

template <class B>
QuadFormT<B> qf_scale(const QuadFormT<B>& q, const typename B::Elem& lambda) {
  if (!q.base.is_unit(lambda))
    throw std::domain_error("scaling requires a unit");
  Mat<typename B::Elem> g = q.gram;
  for (auto& e : g.a) e = q.base.mul(e, lambda);
  return {q.base, std::move(g)};
}

template <class B>
QuadFormT<B> qf_hyperbolic(const B& base, int n) {
  std::vector<typename B::Elem> d;
  for (int i = 0; i < n; ++i) {
    d.push_back(base.one());
    d.push_back(base.from_int(-1));
  }
  return qf_diagonal(base, d);
}

// <1, b_1> x ... x <1, b_k>: the diagonal of all subset products, subsets
// enumerated by ascending bitmask. Entries must be units.
template <class B>
QuadFormT<B> pfister(const B& base, const std::vector<typename B::Elem>& b) {
  for (const auto& e : b)
    if (!base.is_unit(e))
      throw std::domain_error("Pfister form entries must be units");
  const std::size_t k = b.size();
  std::vector<typename B::Elem> d;
  d.reserve(1u << k);
  for (std::size_t mask = 0; mask < (1u << k); ++mask) {
    typename B::Elem prod = base.one();
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) prod = base.mul(prod, b[i]);
    d.push_back(std::move(prod));
  }
  return qf_diagonal(base, d);
}

namespace detail {

// Symmetric elimination of a Gram matrix "at an ordering": congruence by
// matrices invertible at the ordering, using only ring multiplications.
// Returns the diagonal entries; their signs at the ordering sum to the
// Sylvester signature there.
template <class B>
std::vector<typename B::Elem> eliminate_at(const B& base,
                                           Mat<typename B::Elem> g,
                                           const typename B::Ord& ord) {
  const int n = g.rows;
  auto scale_row_col = [&](int r, const typename B::Elem& c) {
    for (int j = 0; j < n; ++j) g.at(r, j) = base.mul(g.at(r, j), c);
    for (int i = 0; i < n; ++i) g.at(i, r) = base.mul(g.at(i, r), c);
  };
  auto add_row_col = [&](int dst, int src) {  // e_dst <- e_dst + e_src
    for (int j = 0; j < n; ++j)
      g.at(dst, j) = base.add(g.at(dst, j), g.at(src, j));
    for (int i = 0; i < n; ++i)
      g.at(i, dst) = base.add(g.at(i, dst), g.at(i, src));
  };
  auto swap_row_col = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < n; ++j) std::swap(g.at(a, j), g.at(b, j));
    for (int i = 0; i < n; ++i) std::swap(g.at(i, a), g.at(i, b));
  };

  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!base.is_zero_at(g.at(i, i), ord)) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      int pi = -1, pj = -1;
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!base.is_zero_at(g.at(i, j), ord)) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;  // remaining block vanishes at the ordering
      add_row_col(pi, pj);  // diagonal becomes 2 g_ij + (terms vanishing at ord)
      pivot = pi;
    }
    swap_row_col(k, pivot);
    const typename B::Elem p = g.at(k, k);
    for (int j = k + 1; j < n; ++j) {
      const typename B::Elem c = g.at(k, j);
      if (base.is_zero(c)) {
        continue;
      }
      // e_j <- p * e_j - c * e_k, performed symmetrically.
      scale_row_col(j, p);
      for (int t = 0; t < n; ++t)
        g.at(j, t) = base.sub(g.at(j, t), base.mul(c, g.at(k, t)));
      for (int t = 0; t < n; ++t)
        g.at(t, j) = base.sub(g.at(t, j), base.mul(c, g.at(t, k)));
    }
    // Strip rational content from the untouched rows: scaling a basis
    // vector by a positive rational is a congruence and keeps entries small.
    for (int j = k + 1; j < n; ++j) {
      Rational lam(0);
      for (int t = 0; t < n; ++t) lam = rational_gcd(lam, base.content(g.at(j, t)));
      if (!lam.is_zero() && lam != 1)
        scale_row_col(j, base.from_rational(1 / lam));
    }
  }
  std::vector<typename B::Elem> diag;
  diag.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) diag.push_back(g.at(i, i));
  return diag;
}

}  // namespace detail

// Sylvester signature at an ordering of the base.
template <class B>
int signature_at(const QuadFormT<B>& q, const typename B::Ord& ord) {
  int sig = 0;
  for (const auto& d : detail::eliminate_at(q.base, q.gram, ord))
    sig += q.base.sign_at(d, ord);
  return sig;
}

// Total signature across all orderings of the base, in canonical order.
template <class B>
std::vector<int> qf_total_signature(const QuadFormT<B>& q) {
  std::vector<int> out;
  for (const auto& ord : q.base.orderings()) out.push_back(signature_at(q, ord));
  return out;
}

// --- diagonalization with a change-of-basis witness (etale base) ---------

struct Diagonalization {
  QuadForm form;               // diagonal Gram
  Mat<EtaleElement> witness;   // invertible P with P^T G P = diagonal
};

// Symmetric Gaussian elimination per factor field. Pivot rule: first
// nonzero diagonal entry, else the smallest off-diagonal (i, j) via the
// basis move e_i <- e_i + e_j (2 is invertible). Zero rows remain for
// singular forms.
Diagonalization diagonalize(const QuadForm& q);

// --- trace forms and transfer -------------------------------------------

// Gram matrix of (x, y) -> Tr(xy) on the concatenated power basis, over Q.
QuadForm trace_form(const EtaleAlgebra& T);

// Scharlau transfer along the extension: Gram over the base indexed by
// (module index, power basis) pairs, entry Tr(y^u q_kl y^v).
QuadForm transfer_quadratic(const RelativeEtale& E, const RelQuadForm& q);

// Extension of scalars from the base to the total algebra.
RelQuadForm qf_extend(const RelativeEtale& E, const QuadForm& q);

// --- nonsingularity -------------------------------------------------------

// Determinant test per base factor after flattening to the factor's number
// field (via the regular representation of y for relative bases).
bool qf_nonsingular(const QuadForm& q);
bool qf_nonsingular(const RelQuadForm& q);

// Certifies hyperbolicity: the given index set spans a totally isotropic
// direct summand of half the rank and the form is nonsingular.
template <class B>
bool qf_hyperbolic_witness(const QuadFormT<B>& q, const std::vector<int>& lagr) {
  if (q.dim() % 2 != 0) return false;
  if (static_cast<int>(lagr.size()) != q.dim() / 2) return false;
  for (int i : lagr)
    for (int j : lagr)
      if (!q.base.is_zero(q.gram.at(i, j))) return false;
  return qf_nonsingular(q);
}

// P^T G P, for congruence tests.
template <class B>
Mat<typename B::Elem> congruence(const B& base, const Mat<typename B::Elem>& g,
                                 const Mat<typename B::Elem>& p) {
  const int n = g.rows, m = p.cols;
  Mat<typename B::Elem> gp(n, m, base.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      auto acc = base.zero();
      for (int t = 0; t < n; ++t)
        acc = base.add(acc, base.mul(g.at(i, t), p.at(t, j)));
      gp.at(i, j) = acc;
    }
  Mat<typename B::Elem> r(m, m, base.zero());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto acc = base.zero();
      for (int t = 0; t < n; ++t)
        acc = base.add(acc, base.mul(p.at(t, i), gp.at(t, j)));
      r.at(i, j) = acc;
    }
  return r;
}

}  // namespace formsig
