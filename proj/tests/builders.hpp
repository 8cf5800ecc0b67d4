#pragma once

// Shared constructors for the algebra templates exercised across the test
// suites and the acceptance corpus.

#include "formsig/hermform.hpp"
#include "formsig/involutive.hpp"

#include <vector>

namespace formsig::testing {

template <class B>
InvAlgebraT<B> alg_base_id(const B& base, int n = 1) {
  return InvAlgebraT<B>::with_identity_twist(base, n, DivisionKind::Base,
                                             base.zero(), base.zero(),
                                             base.zero(),
                                             StandardInv::Transpose);
}

template <class B>
InvAlgebraT<B> alg_m2_transpose(const B& base) {
  return alg_base_id(base, 2);
}

template <class B>
InvAlgebraT<B> alg_m2_symplectic(const B& base) {
  InvAlgebraT<B> probe = alg_base_id(base, 1);
  Mat<DElemT<B>> u(2, 2, probe.dzero());
  u.at(0, 1) = probe.done();
  u.at(1, 0) = probe.dneg(probe.done());
  return InvAlgebraT<B>(base, 2, DivisionKind::Base, base.zero(), base.zero(),
                        base.zero(), StandardInv::Transpose, std::move(u));
}

template <class B>
InvAlgebraT<B> alg_quaternion(const B& base, long long a = -1, long long b = -1,
                              int n = 1) {
  return InvAlgebraT<B>::with_identity_twist(
      base, n, DivisionKind::Quaternion, base.zero(), base.from_int(a),
      base.from_int(b), StandardInv::ConjTranspose);
}

template <class B>
InvAlgebraT<B> alg_unitary(const B& base, const typename B::Elem& d, int n = 1) {
  return InvAlgebraT<B>::with_identity_twist(base, n, DivisionKind::Quadratic,
                                             d, base.zero(), base.zero(),
                                             StandardInv::ConjTranspose);
}

// Diagonal hermitian form with integer scalar entries.
template <class B>
HermFormT<B> int_diag_form(const InvAlgebraT<B>& A,
                           std::initializer_list<long long> d) {
  std::vector<AlgElemT<B>> entries;
  for (long long v : d) entries.push_back(A.scalar_int(v));
  return diagonal_form(A, entries);
}

}  // namespace formsig::testing
