#pragma once

// The hermitian trace transfer along a finite etale extension, the
// splitting of an ordering into its extensions, and machine checks of the
// two trace formulas.

#include "formsig/morita.hpp"
#include "formsig/quadform.hpp"
#include "formsig/signature.hpp"

#include <cstdint>
#include <vector>

namespace formsig {

struct TransferContext {
  InvolutiveAlgebra algebra;      // (A, sigma) over the base of the extension
  RelativeEtale extension;        // K -> T
  RelInvolutiveAlgebra extended;  // (A tensor T, sigma tensor id)

  TransferContext(InvolutiveAlgebra A, RelativeEtale E);
};

// Gram over A indexed by (module index, power basis) pairs; each D
// coordinate of each entry is traced down coefficientwise. Nonsingular
// input gives nonsingular output, hyperbolic gives hyperbolic.
HermForm transfer_hermitian(const TransferContext& ctx, const RelHermForm& h);

struct SplitReport {
  Ordering alpha;
  long r = 0;  // number of real extensions
  long t = 0;  // rank of the extension at alpha's factor
  std::vector<RelOrdering> extensions;
};

SplitReport split_at(const TransferContext& ctx, const Ordering& alpha);

struct KtfReport {
  long r = 0;
  long t = 0;
  int lhs = 0;  // signature of the transferred form at alpha
  int rhs = 0;  // sum over the extensions
  std::vector<int> per_gamma;
  bool pass = false;
};

// sign_alpha(Tr* q) = sum over extensions of sign_gamma(q), each counted
// once.
KtfReport verify_ktf_commutative(const RelativeEtale& E, const RelQuadForm& q,
                                 const Ordering& alpha);

// The hermitian trace formula at alpha, with the reference form extended to
// the total algebra on the right-hand side. Both sides are 0 by convention
// when alpha lies in the nil set.
KtfReport verify_ktf_hermitian(const TransferContext& ctx, const RelHermForm& h,
                               const Ordering& alpha, const ReferenceForm& eta);

struct ExtendNilReport {
  long r = 0;
  int transfer_signature = 0;   // of the transferred unit form
  bool count_matches = false;   // r == transfer_signature
  bool nil_correspondence = false;
  bool eta_extension_ok = false;
  int samples = 0;
  bool pass = false;
};

// Checks extension counting, the nil correspondence along the extension,
// and the compatibility of eta-signatures with scalar extension on random
// diagonal forms.
ExtendNilReport verify_extend_nil(const TransferContext& ctx,
                                  const Ordering& alpha,
                                  const ReferenceForm& eta, int samples,
                                  std::uint64_t seed);

// Confirms that only the real extensions contribute to the transferred
// signature: the sum over the r real extensions already equals the full
// left-hand side, so the t - r complex factors contribute zero.
bool zero_plus_weakly_hyperbolic_check(const TransferContext& ctx,
                                       const RelHermForm& h,
                                       const Ordering& alpha,
                                       const ReferenceForm& eta);

}  // namespace formsig
