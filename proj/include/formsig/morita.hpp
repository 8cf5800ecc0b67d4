#pragma once

// Constructive hermitian Morita machinery at desk scale: reduction
// M_n(D) -> D, the equivalence between matrix algebras over a common D
// realized as reduce-then-inflate, the product of forms, and extension of
// scalars along an etale extension.

#include "formsig/hermform.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace formsig {

// The division-level algebra (M_1(D), theta) matching A's division data.
template <class B>
InvAlgebraT<B> division_algebra_of(const InvAlgebraT<B>& A) {
  return InvAlgebraT<B>::with_identity_twist(A.base(), 1, A.kind(), A.quad_d(),
                                             A.quat_a(), A.quat_b(),
                                             A.standard());
}

// Morita reduction to the division level: the nm x nm Gram over (D, theta)
// with block (i, j) = u * H_ij. The output epsilon is epsilon * s where
// theta(u)^T = s u.
template <class B>
HermFormT<B> reduce_to_division(const HermFormT<B>& h) {
  const auto& A = h.algebra;
  InvAlgebraT<B> D1 = division_algebra_of(A);
  const int n = A.n(), m = h.dim();
  Mat<AlgElemT<B>> g(n * m, n * m, D1.zero_elem());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      AlgElemT<B> blk = A.mul(A.twist(), h.gram.at(i, j));
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          g.at(i * n + p, j * n + q) = AlgElemT<B>(1, 1, blk.at(p, q));
    }
  return herm_from_gram(std::move(D1), h.epsilon * A.twist_sign(), std::move(g));
}

// Inverse construction: a form over (D, theta) of rank divisible by the
// target's matrix size inflates to the target algebra, dividing the blocks
// by the target twist.
template <class B>
HermFormT<B> inflate_from_division(const HermFormT<B>& r,
                                   const InvAlgebraT<B>& target) {
  const auto& D1 = r.algebra;
  if (D1.kind() != target.kind() || !(D1.base() == target.base()))
    throw std::domain_error("inflation target has mismatched division data");
  const int l = target.n();
  if (r.dim() % l != 0)
    throw std::domain_error(
        "rank is not divisible by the target matrix size; the image module "
        "is not free");
  const int m = r.dim() / l;
  Mat<AlgElemT<B>> g(m, m, target.zero_elem());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      AlgElemT<B> blk(l, l, target.dzero());
      for (int p = 0; p < l; ++p)
        for (int q = 0; q < l; ++q)
          blk.at(p, q) = r.gram.at(i * l + p, j * l + q).at(0, 0);
      g.at(i, j) = target.mul(target.twist_inverse(), blk);
    }
  return herm_from_gram(target, r.epsilon * target.twist_sign(), std::move(g));
}

// A Morita context between matrix algebras over a common D and base.
// delta = s_source * s_target records how epsilon transforms; for the first
// kind it is +1 exactly when both involutions are of the same type.
template <class B>
struct MoritaContextT {
  InvAlgebraT<B> source;
  InvAlgebraT<B> target;
  int delta;

  MoritaContextT(InvAlgebraT<B> src, InvAlgebraT<B> tgt)
      : source(std::move(src)), target(std::move(tgt)),
        delta(source.twist_sign() * target.twist_sign()) {
    if (!(source.base() == target.base()))
      throw std::domain_error("Morita context needs a common base");
    if (source.kind() != target.kind() ||
        !(source.quad_d() == target.quad_d()) ||
        !(source.quat_a() == target.quat_a()) ||
        !(source.quat_b() == target.quat_b()))
      throw std::domain_error("Morita context needs a common division algebra");
  }
};

using MoritaContext = MoritaContextT<EtaleAlgebra>;

// The equivalence on forms: reduce through (D, theta), then inflate into
// the target. Multiplies epsilon by delta.
template <class B>
HermFormT<B> functor_F(const MoritaContextT<B>& ctx, const HermFormT<B>& h) {
  if (!(h.algebra == ctx.source))
    throw std::domain_error("form does not live over the context source");
  return inflate_from_division(reduce_to_division(h), ctx.target);
}

template <class B>
MoritaContextT<B> reverse_context(const MoritaContextT<B>& ctx) {
  return MoritaContextT<B>(ctx.target, ctx.source);
}

// Smallest number of orthogonal copies of h whose image module is free over
// the context target (reference forms stay reference forms under copying).
template <class B>
int copies_for_target(const MoritaContextT<B>& ctx, const HermFormT<B>& h) {
  const int l = ctx.target.n();
  int copies = 1;
  while ((h.dim() * copies * ctx.source.n()) % l != 0) ++copies;
  return copies;
}

// Hyperbolicity certificate that also looks through the canonical Morita
// reduction, where module-internal Lagrangians become visible on the basis.
template <class B>
bool herm_hyperbolic_certified(const HermFormT<B>& h) {
  if (herm_is_hyperbolic_shape(h)) return true;
  return herm_is_hyperbolic_shape(reduce_to_division(h));
}

// Product of forms: phi over (A, sigma) admitting the right action of
// (A, sigma) itself through the involution, psi over (A, sigma). Admittance
// forces phi's Gram entries to be central, which is checked; the product is
// then the Kronecker Gram with epsilon the product of the epsilons.
template <class B>
HermFormT<B> product_of_forms(const HermFormT<B>& phi, const HermFormT<B>& psi) {
  if (!(phi.algebra == psi.algebra))
    throw std::domain_error("product of forms needs a common algebra");
  const auto& A = phi.algebra;
  for (const auto& entry : phi.gram.a) {
    // Central: scalar diagonal with a central D-coordinate.
    for (int p = 0; p < A.n(); ++p)
      for (int q = 0; q < A.n(); ++q) {
        if (p == q) continue;
        if (!A.dis_zero(entry.at(p, q)))
          throw std::domain_error("admittance fails: Gram entry is not central");
      }
    for (int p = 1; p < A.n(); ++p)
      if (!(entry.at(p, p) == entry.at(0, 0)))
        throw std::domain_error("admittance fails: Gram entry is not central");
    if (!A.dis_central(entry.at(0, 0)))
      throw std::domain_error("admittance fails: Gram entry is not central");
  }
  const int p_dim = phi.dim(), q_dim = psi.dim();
  Mat<AlgElemT<B>> g(q_dim * p_dim, q_dim * p_dim, A.zero_elem());
  for (int a = 0; a < q_dim; ++a)
    for (int b = 0; b < q_dim; ++b)
      for (int i = 0; i < p_dim; ++i)
        for (int j = 0; j < p_dim; ++j)
          g.at(a * p_dim + i, b * p_dim + j) =
              A.mul(phi.gram.at(i, j), psi.gram.at(a, b));
  return herm_from_gram(A, phi.epsilon * psi.epsilon, std::move(g));
}

// --- extension of scalars -------------------------------------------------

// A over the base of E, with every coefficient embedded into the total
// algebra; the same shape is an algebra with involution over the extension.
RelInvolutiveAlgebra extend_algebra(const InvolutiveAlgebra& A,
                                    const RelativeEtale& E);

// h with the same Gram over the extended algebra; epsilon unchanged.
RelHermForm scalar_extend(const HermForm& h, const RelativeEtale& E);

RelQuadForm quad_scalar_extend(const QuadForm& q, const RelativeEtale& E);

// --- commuting square check ------------------------------------------------

struct BrcomRow {
  int gamma_index = 0;
  int via_extend_then_functor = 0;  // extend h, then apply the extended context
  int via_functor_then_extend = 0;  // apply the context, then extend
};

struct BrcomReport {
  std::vector<BrcomRow> rows;
  bool commutes = true;
};

// Verifies, at the level of signatures at every ordering of the extension,
// that extension of scalars commutes with the Morita functor; eta is the
// reference form for the source.
BrcomReport check_brcom_square(const MoritaContext& ctx, const RelativeEtale& E,
                               const HermForm& h, const HermForm& eta);

}  // namespace formsig
