#pragma once

// Epsilon-hermitian forms over an involutive matrix algebra, on free
// modules of finite rank.

#include "formsig/flatten.hpp"
#include "formsig/involutive.hpp"
#include "formsig/quadform.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace formsig {

template <class B>
struct HermFormT {
  InvAlgebraT<B> algebra;
  int epsilon = 1;  // sigma(g_ji) = epsilon * g_ij
  Mat<AlgElemT<B>> gram;

  int dim() const { return gram.rows; }
};

using HermForm = HermFormT<EtaleAlgebra>;
using RelHermForm = HermFormT<RelativeEtale>;

template <class B>
void check_herm_invariant(const HermFormT<B>& h) {
  if (!h.gram.square()) throw std::domain_error("hermitian Gram must be square");
  if (h.epsilon != 1 && h.epsilon != -1)
    throw std::domain_error("epsilon must be +1 or -1");
  const auto& A = h.algebra;
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j) {
      AlgElemT<B> lhs = A.involution(h.gram.at(j, i));
      AlgElemT<B> rhs = h.gram.at(i, j);
      if (h.epsilon == -1) rhs = A.neg(rhs);
      if (!A.elem_eq(lhs, rhs))
        throw std::domain_error("Gram matrix violates the hermitian symmetry");
    }
}

template <class B>
HermFormT<B> herm_from_gram(InvAlgebraT<B> algebra, int epsilon,
                            Mat<AlgElemT<B>> gram) {
  HermFormT<B> h{std::move(algebra), epsilon, std::move(gram)};
  check_herm_invariant(h);
  return h;
}

// <a_1, ..., a_m> with sigma-symmetric entries; epsilon = +1.
template <class B>
HermFormT<B> diagonal_form(InvAlgebraT<B> algebra,
                           const std::vector<AlgElemT<B>>& a) {
  for (const auto& e : a)
    if (!algebra.is_symmetric(e))
      throw std::domain_error("diagonal hermitian entries must be symmetric");
  Mat<AlgElemT<B>> g(static_cast<int>(a.size()), static_cast<int>(a.size()),
                     algebra.zero_elem());
  for (std::size_t i = 0; i < a.size(); ++i)
    g.at(static_cast<int>(i), static_cast<int>(i)) = a[i];
  return {std::move(algebra), 1, std::move(g)};
}

template <class B>
HermFormT<B> orth_sum(const HermFormT<B>& h1, const HermFormT<B>& h2) {
  if (!(h1.algebra == h2.algebra) || h1.epsilon != h2.epsilon)
    throw std::domain_error("orthogonal sum needs a common algebra and epsilon");
  return {h1.algebra, h1.epsilon,
          mat_block_diag(h1.gram, h2.gram, h1.algebra.zero_elem())};
}

// Product of a quadratic form over the base with a hermitian form: the base
// scalars act centrally, so the Gram is the Kronecker product.
template <class B>
HermFormT<B> q_tensor_h(const QuadFormT<B>& q, const HermFormT<B>& h) {
  if (!(q.base == h.algebra.base()))
    throw std::domain_error("quadratic factor must live over the same base");
  const int n = q.dim(), m = h.dim();
  Mat<AlgElemT<B>> g(n * m, n * m, h.algebra.zero_elem());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          g.at(i * m + k, j * m + l) =
              h.algebra.mul_base(q.gram.at(i, j), h.gram.at(k, l));
  return {h.algebra, h.epsilon, std::move(g)};
}

// 2m-dimensional form with blocks [[0, 1], [eps, 0]].
template <class B>
HermFormT<B> hyperbolic_herm(int m, InvAlgebraT<B> algebra, int epsilon) {
  if (m < 1) throw std::domain_error("hyperbolic rank must be positive");
  Mat<AlgElemT<B>> g(2 * m, 2 * m, algebra.zero_elem());
  for (int i = 0; i < m; ++i) {
    g.at(2 * i, 2 * i + 1) = algebra.identity();
    g.at(2 * i + 1, 2 * i) = epsilon == 1 ? algebra.identity()
                                          : algebra.neg(algebra.identity());
  }
  return {std::move(algebra), epsilon, std::move(g)};
}

template <class B>
HermFormT<B> herm_neg(const HermFormT<B>& h) {
  HermFormT<B> r = h;
  for (auto& e : r.gram.a) e = h.algebra.neg(e);
  return r;
}

// h perp h perp ... (times >= 1 copies).
template <class B>
HermFormT<B> herm_repeat(const HermFormT<B>& h, int times) {
  if (times < 1) throw std::domain_error("herm_repeat needs at least one copy");
  HermFormT<B> r = h;
  for (int i = 1; i < times; ++i) r = orth_sum(r, h);
  return r;
}

// Gram invertible as a matrix over the algebra, decided per base factor via
// the regular representation of D (and of y for relative bases).
template <class B>
bool nonsingular(const HermFormT<B>& h) {
  return base_matrix_nonsingular(h.algebra.base(),
                                 flatten_alg_matrix(h.algebra, h.gram));
}

// Certified hyperbolicity: the index set spans a totally isotropic direct
// summand of half the rank of a nonsingular form.
template <class B>
bool herm_hyperbolic_witness(const HermFormT<B>& h,
                             const std::vector<int>& lagr) {
  if (h.dim() % 2 != 0) return false;
  if (static_cast<int>(lagr.size()) != h.dim() / 2) return false;
  for (int i : lagr)
    for (int j : lagr)
      if (!h.algebra.elem_is_zero(h.gram.at(i, j))) return false;
  return nonsingular(h);
}

// Finds a totally isotropic half-rank subset among the basis vectors (the
// forms this library constructs keep their Lagrangians on the basis).
template <class B>
bool herm_is_hyperbolic_shape(const HermFormT<B>& h) {
  const int m = h.dim();
  if (m % 2 != 0) return false;
  // Greedy pairing: treat basis indices as vertices, look for a half-size
  // isotropic subset; dimensions here are small.
  std::vector<int> subset;
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  auto isotropic_with = [&](int v) {
    if (!h.algebra.elem_is_zero(h.gram.at(v, v))) return false;
    for (int s : subset)
      if (!h.algebra.elem_is_zero(h.gram.at(v, s)) ||
          !h.algebra.elem_is_zero(h.gram.at(s, v)))
        return false;
    return true;
  };
  for (int v = 0; v < m && static_cast<int>(subset.size()) < m / 2; ++v)
    if (isotropic_with(v)) subset.push_back(v);
  if (static_cast<int>(subset.size()) != m / 2) return false;
  return nonsingular(h);
}

// Direct product over a product base: componentwise data, all components of
// the same shape.
HermForm direct_product(const std::vector<HermForm>& components);

}  // namespace formsig
