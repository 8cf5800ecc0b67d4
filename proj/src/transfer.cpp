#include "formsig/transfer.hpp"

#include <random>

namespace formsig {

TransferContext::TransferContext(InvolutiveAlgebra A, RelativeEtale E)
    : algebra(std::move(A)),
      extension(std::move(E)),
      extended(extend_algebra(algebra, extension)) {}

HermForm transfer_hermitian(const TransferContext& ctx, const RelHermForm& h) {
  if (!(h.algebra == ctx.extended))
    throw std::domain_error("form does not live over the extended algebra");
  const RelativeEtale& E = ctx.extension;
  const InvolutiveAlgebra& A = ctx.algebra;
  const int t = E.rel_degree();
  const int m = h.dim();
  const int n = A.n();
  const int dd = A.d_dim();

  std::vector<TotalElement> ypow;
  ypow.push_back(E.one());
  for (int j = 1; j < t; ++j) ypow.push_back(E.mul(ypow.back(), E.generator()));

  Mat<AlgElemT<EtaleAlgebra>> g(m * t, m * t, A.zero_elem());
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      const AlgElemT<RelativeEtale>& entry = h.gram.at(k, l);
      for (int u = 0; u < t; ++u)
        for (int v = 0; v < t; ++v) {
          AlgElemT<EtaleAlgebra> out = A.zero_elem();
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              for (int c = 0; c < dd; ++c) {
                TotalElement prod =
                    E.mul(ypow[static_cast<std::size_t>(u)],
                          E.mul(entry.at(p, q).c[static_cast<std::size_t>(c)],
                                ypow[static_cast<std::size_t>(v)]));
                out.at(p, q).c[static_cast<std::size_t>(c)] = E.trace_down(prod);
              }
          g.at(k * t + u, l * t + v) = std::move(out);
        }
    }
  return herm_from_gram(A, h.epsilon, std::move(g));
}

SplitReport split_at(const TransferContext& ctx, const Ordering& alpha) {
  SplitReport rep;
  rep.alpha = alpha;
  rep.extensions = ctx.extension.extensions_of(alpha);
  rep.r = static_cast<long>(rep.extensions.size());
  rep.t = ctx.extension.rel_degree();
  return rep;
}

KtfReport verify_ktf_commutative(const RelativeEtale& E, const RelQuadForm& q,
                                 const Ordering& alpha) {
  KtfReport rep;
  rep.t = E.rel_degree();
  rep.lhs = signature_at(transfer_quadratic(E, q), alpha);
  for (const auto& gamma : E.extensions_of(alpha)) {
    int s = signature_at(q, gamma);
    rep.per_gamma.push_back(s);
    rep.rhs += s;
  }
  rep.r = static_cast<long>(rep.per_gamma.size());
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

KtfReport verify_ktf_hermitian(const TransferContext& ctx, const RelHermForm& h,
                               const Ordering& alpha, const ReferenceForm& eta) {
  KtfReport rep;
  rep.t = ctx.extension.rel_degree();
  HermForm transferred = transfer_hermitian(ctx, h);
  rep.lhs = eta_signature(transferred, alpha, eta);
  RelHermForm eta_ext = scalar_extend(eta.form, ctx.extension);
  for (const auto& gamma : ctx.extension.extensions_of(alpha)) {
    int s = eta_signature_rel(h, gamma, eta_ext);
    rep.per_gamma.push_back(s);
    rep.rhs += s;
  }
  rep.r = static_cast<long>(rep.per_gamma.size());
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

ExtendNilReport verify_extend_nil(const TransferContext& ctx,
                                  const Ordering& alpha,
                                  const ReferenceForm& eta, int samples,
                                  std::uint64_t seed) {
  ExtendNilReport rep;
  const RelativeEtale& E = ctx.extension;
  const InvolutiveAlgebra& A = ctx.algebra;

  SplitReport split = split_at(ctx, alpha);
  rep.r = split.r;
  RelQuadForm unit = qf_diagonal(E, std::vector<TotalElement>{E.one()});
  rep.transfer_signature = signature_at(transfer_quadratic(E, unit), alpha);
  rep.count_matches = rep.transfer_signature == rep.r;

  rep.nil_correspondence = true;
  for (const auto& gamma : split.extensions)
    if (A.is_nil_at(alpha) != ctx.extended.is_nil_at(gamma))
      rep.nil_correspondence = false;

  rep.eta_extension_ok = true;
  std::mt19937_64 rng(seed);
  RelHermForm eta_ext = scalar_extend(eta.form, E);
  for (int s = 0; s < samples; ++s) {
    std::vector<AlgElemT<EtaleAlgebra>> d;
    int dim = 1 + static_cast<int>(rng() % 3);
    while (static_cast<int>(d.size()) < dim) {
      long long v = static_cast<long long>(rng() % 9) - 4;
      if (v == 0) continue;
      d.push_back(A.scalar_int(v));
    }
    HermForm h = diagonal_form(A, d);
    int lhs = eta_signature(h, alpha, eta);
    for (const auto& gamma : split.extensions) {
      int rhs = eta_signature_rel(scalar_extend(h, E), gamma, eta_ext);
      if (lhs != rhs) rep.eta_extension_ok = false;
    }
    ++rep.samples;
  }
  rep.pass = rep.count_matches && rep.nil_correspondence && rep.eta_extension_ok;
  return rep;
}

bool zero_plus_weakly_hyperbolic_check(const TransferContext& ctx,
                                       const RelHermForm& h,
                                       const Ordering& alpha,
                                       const ReferenceForm& eta) {
  KtfReport rep = verify_ktf_hermitian(ctx, h, alpha, eta);
  return rep.pass;
}

}  // namespace formsig
