#include "formsig/morita.hpp"

#include "formsig/signature.hpp"

namespace formsig {

namespace {

DElemT<RelativeEtale> extend_delem(const RelativeEtale& E,
                                   const DElemT<EtaleAlgebra>& x) {
  DElemT<RelativeEtale> r;
  r.c.reserve(x.c.size());
  for (const auto& c : x.c) r.c.push_back(E.embed(c));
  return r;
}

}  // namespace

RelInvolutiveAlgebra extend_algebra(const InvolutiveAlgebra& A,
                                    const RelativeEtale& E) {
  if (!(A.base() == E.base()))
    throw std::domain_error("algebra does not live over the extension's base");
  Mat<DElemT<RelativeEtale>> twist(A.n(), A.n(), DElemT<RelativeEtale>{});
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j)
      twist.at(i, j) = extend_delem(E, A.twist().at(i, j));
  return RelInvolutiveAlgebra(E, A.n(), A.kind(), E.embed(A.quad_d()),
                              E.embed(A.quat_a()), E.embed(A.quat_b()),
                              A.standard(), std::move(twist));
}

AlgElemT<RelativeEtale> extend_alg_elem(const RelativeEtale& E,
                                        const AlgElemT<EtaleAlgebra>& x) {
  AlgElemT<RelativeEtale> r(x.rows, x.cols, DElemT<RelativeEtale>{});
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = extend_delem(E, x.a[i]);
  return r;
}

RelHermForm scalar_extend(const HermForm& h, const RelativeEtale& E) {
  RelInvolutiveAlgebra algebra = extend_algebra(h.algebra, E);
  Mat<AlgElemT<RelativeEtale>> g(h.gram.rows, h.gram.cols, algebra.zero_elem());
  for (std::size_t i = 0; i < h.gram.a.size(); ++i)
    g.a[i] = extend_alg_elem(E, h.gram.a[i]);
  return herm_from_gram(std::move(algebra), h.epsilon, std::move(g));
}

RelQuadForm quad_scalar_extend(const QuadForm& q, const RelativeEtale& E) {
  return qf_extend(E, q);
}

BrcomReport check_brcom_square(const MoritaContext& ctx, const RelativeEtale& E,
                               const HermForm& h, const HermForm& eta) {
  if (!(h.algebra == ctx.source) || !(eta.algebra == ctx.source))
    throw std::domain_error("form or reference does not live over the source");

  // Pad the reference so its image module is free over the target.
  HermForm eta_padded = herm_repeat(eta, copies_for_target(ctx, eta));

  // Path 1: apply the functor, then extend scalars.
  HermForm fh = functor_F(ctx, h);
  HermForm feta = functor_F(ctx, eta_padded);
  RelHermForm fh_ext = scalar_extend(fh, E);
  RelHermForm feta_ext = scalar_extend(feta, E);

  // Path 2: extend scalars, then apply the extended functor.
  MoritaContextT<RelativeEtale> ctx_ext(extend_algebra(ctx.source, E),
                                        extend_algebra(ctx.target, E));
  RelHermForm h_ext = scalar_extend(h, E);
  RelHermForm eta_ext = scalar_extend(eta_padded, E);
  RelHermForm fh2 = functor_F(ctx_ext, h_ext);
  RelHermForm feta2 = functor_F(ctx_ext, eta_ext);

  BrcomReport report;
  int idx = 0;
  for (const auto& gamma : E.orderings()) {
    BrcomRow row;
    row.gamma_index = idx++;
    row.via_functor_then_extend = eta_signature_rel(fh_ext, gamma, feta_ext);
    row.via_extend_then_functor = eta_signature_rel(fh2, gamma, feta2);
    if (row.via_functor_then_extend != row.via_extend_then_functor)
      report.commutes = false;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace formsig
