#pragma once

// Matrix algebras M_n(D) with involution over an etale base (or over the
// total algebra of an extension), where D is the base itself, a quadratic
// extension, or a quaternion algebra. Every involution is a unit twist of
// the standard one for its kind: sigma(X) = u^-1 theta(X)^T u with
// theta(u)^T = +-u. Types at orderings and the set of signature-killing
// orderings follow the field-level classification.

#include "formsig/etale.hpp"
#include "formsig/matrix.hpp"
#include "formsig/relative.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace formsig {

enum class DivisionKind { Base, Quadratic, Quaternion };
enum class StandardInv { Transpose, ConjTranspose };
enum class InvolutionType { Orthogonal, Symplectic, Unitary, UnitarySplit };

inline const char* involution_type_name(InvolutionType t) {
  switch (t) {
    case InvolutionType::Orthogonal: return "orthogonal";
    case InvolutionType::Symplectic: return "symplectic";
    case InvolutionType::Unitary: return "unitary";
    case InvolutionType::UnitarySplit: return "unitary-split";
  }
  return "?";
}

// Element of D: 1, 2 or 4 coordinates over the base.
template <class B>
struct DElemT {
  std::vector<typename B::Elem> c;

  bool operator==(const DElemT& o) const { return c == o.c; }
};

template <class B>
using AlgElemT = Mat<DElemT<B>>;

template <class B>
class InvAlgebraT {
 public:
  using Base = B;
  using BElem = typename B::Elem;
  using DElem = DElemT<B>;
  using AlgElem = AlgElemT<B>;
  using Ord = typename B::Ord;

  // d / qa / qb are ignored unless the kind needs them; they must be units.
  InvAlgebraT(B base, int n, DivisionKind kind, BElem d, BElem qa, BElem qb,
              StandardInv standard, Mat<DElem> twist);

  // Convenience: identity twist.
  static InvAlgebraT with_identity_twist(B base, int n, DivisionKind kind,
                                         BElem d, BElem qa, BElem qb,
                                         StandardInv standard);

  const B& base() const { return base_; }
  int n() const { return n_; }
  DivisionKind kind() const { return kind_; }
  const BElem& quad_d() const { return d_; }
  const BElem& quat_a() const { return qa_; }
  const BElem& quat_b() const { return qb_; }
  StandardInv standard() const { return standard_; }
  const Mat<DElem>& twist() const { return twist_; }
  const Mat<DElem>& twist_inverse() const { return twist_inv_; }
  int twist_sign() const { return twist_sign_; }  // theta(u)^T = sign * u

  bool operator==(const InvAlgebraT& o) const {
    return base_ == o.base_ && n_ == o.n_ && kind_ == o.kind_ && d_ == o.d_ &&
           qa_ == o.qa_ && qb_ == o.qb_ && standard_ == o.standard_ &&
           twist_.a == o.twist_.a;
  }

  int d_dim() const {
    switch (kind_) {
      case DivisionKind::Base: return 1;
      case DivisionKind::Quadratic: return 2;
      case DivisionKind::Quaternion: return 4;
    }
    return 1;
  }
  // Degree of the algebra over its centre.
  int degree() const { return kind_ == DivisionKind::Quaternion ? 2 * n_ : n_; }
  std::string center_description() const;

  // --- D arithmetic -------------------------------------------------------
  DElem dzero() const { return DElem{std::vector<BElem>(d_dim(), base_.zero())}; }
  DElem done() const;
  DElem dfrom_base(const BElem& x) const;
  DElem dfrom_int(long long v) const { return dfrom_base(base_.from_int(v)); }
  bool dis_zero(const DElem& x) const;
  DElem dadd(const DElem& x, const DElem& y) const;
  DElem dsub(const DElem& x, const DElem& y) const;
  DElem dneg(const DElem& x) const;
  DElem dmul(const DElem& x, const DElem& y) const;
  DElem dconj(const DElem& x) const;  // canonical involution of D
  BElem dnorm(const DElem& x) const;  // x * conj(x), a base element
  bool dis_unit(const DElem& x) const;
  DElem dinv(const DElem& x) const;
  bool dis_central(const DElem& x) const;
  std::string dstr(const DElem& x) const;

  // --- algebra elements ----------------------------------------------------
  AlgElem zero_elem() const { return AlgElem(n_, n_, dzero()); }
  AlgElem identity() const;
  AlgElem scalar(const BElem& c) const;  // c * identity
  AlgElem scalar_int(long long v) const { return scalar(base_.from_int(v)); }
  bool elem_is_zero(const AlgElem& x) const;
  bool elem_eq(const AlgElem& x, const AlgElem& y) const;
  AlgElem add(const AlgElem& x, const AlgElem& y) const;
  AlgElem sub(const AlgElem& x, const AlgElem& y) const;
  AlgElem neg(const AlgElem& x) const;
  AlgElem mul(const AlgElem& x, const AlgElem& y) const;
  AlgElem mul_base(const BElem& c, const AlgElem& x) const;
  // theta entrywise, then transpose.
  AlgElem theta_transpose(const AlgElem& x) const;
  // sigma(X) = u^-1 theta(X)^T u.
  AlgElem involution(const AlgElem& x) const;
  bool is_symmetric(const AlgElem& x) const {
    return elem_eq(involution(x), x);
  }

  // Inverse of a matrix over D; throws NotAUnitError if singular.
  Mat<DElem> dmat_inverse(Mat<DElem> m) const;

  // --- classification -------------------------------------------------------
  InvolutionType type_at(const Ord& ord) const;
  // Quaternion split at the ordering (true for the base kind).
  bool split_at(const Ord& ord) const;
  bool is_nil_at(const Ord& ord) const;

  std::string elem_str(const AlgElem& x) const;

 private:
  B base_;
  int n_;
  DivisionKind kind_;
  BElem d_, qa_, qb_;
  StandardInv standard_;
  Mat<DElem> twist_;
  Mat<DElem> twist_inv_;
  int twist_sign_ = 1;

  void validate();
};

using InvolutiveAlgebra = InvAlgebraT<EtaleAlgebra>;
using RelInvolutiveAlgebra = InvAlgebraT<RelativeEtale>;

// Orderings where every hermitian signature vanishes.
std::vector<Ordering> nil_set(const InvolutiveAlgebra& A);

// ---------------------------------------------------------------------------
// Implementation.

template <class B>
InvAlgebraT<B>::InvAlgebraT(B base, int n, DivisionKind kind, BElem d, BElem qa,
                            BElem qb, StandardInv standard, Mat<DElem> twist)
    : base_(std::move(base)),
      n_(n),
      kind_(kind),
      d_(std::move(d)),
      qa_(std::move(qa)),
      qb_(std::move(qb)),
      standard_(standard),
      twist_(std::move(twist)) {
  validate();
}

template <class B>
InvAlgebraT<B> InvAlgebraT<B>::with_identity_twist(B base, int n,
                                                   DivisionKind kind, BElem d,
                                                   BElem qa, BElem qb,
                                                   StandardInv standard) {
  int dd = 1;
  if (kind == DivisionKind::Quadratic) dd = 2;
  if (kind == DivisionKind::Quaternion) dd = 4;
  DElemT<B> zero{std::vector<BElem>(static_cast<std::size_t>(dd), base.zero())};
  DElemT<B> one = zero;
  one.c[0] = base.one();
  Mat<DElemT<B>> u(n, n, zero);
  for (int i = 0; i < n; ++i) u.at(i, i) = one;
  return InvAlgebraT(std::move(base), n, kind, std::move(d), std::move(qa),
                     std::move(qb), standard, std::move(u));
}

template <class B>
void InvAlgebraT<B>::validate() {
  if (n_ < 1) throw std::domain_error("matrix size must be positive");
  if (kind_ == DivisionKind::Quadratic && !base_.is_unit(d_))
    throw std::domain_error("quadratic extension element d must be a unit");
  if (kind_ == DivisionKind::Quaternion &&
      (!base_.is_unit(qa_) || !base_.is_unit(qb_)))
    throw std::domain_error("quaternion parameters must be units");
  if (kind_ == DivisionKind::Base && standard_ != StandardInv::Transpose)
    throw std::domain_error("base kind uses the transpose standard involution");
  if (kind_ != DivisionKind::Base && standard_ != StandardInv::ConjTranspose)
    throw std::domain_error(
        "quadratic and quaternion kinds use the conjugate-transpose standard "
        "involution");
  if (twist_.rows != n_ || twist_.cols != n_)
    throw std::domain_error("twist must be an n x n matrix");
  for (const auto& e : twist_.a)
    if (static_cast<int>(e.c.size()) != d_dim())
      throw std::domain_error("twist entry has the wrong coordinate count");

  AlgElem tu = theta_transpose(twist_);
  if (elem_eq(tu, twist_)) {
    twist_sign_ = 1;
  } else if (elem_eq(tu, neg(twist_))) {
    twist_sign_ = -1;
  } else {
    throw std::domain_error("twist must satisfy theta(u)^T = u or -u");
  }
  twist_inv_ = dmat_inverse(twist_);
}

template <class B>
typename InvAlgebraT<B>::DElem InvAlgebraT<B>::done() const {
  DElem e = dzero();
  e.c[0] = base_.one();
  return e;
}

template <class B>
typename InvAlgebraT<B>::DElem InvAlgebraT<B>::dfrom_base(const BElem& x) const {
  DElem e = dzero();
  e.c[0] = x;
  return e;
}

template <class B>
bool InvAlgebraT<B>::dis_zero(const DElem& x) const {
  for (const auto& v : x.c)
    if (!base_.is_zero(v)) return false;
  return true;
}

template <class B>
typename InvAlgebraT<B>::DElem InvAlgebraT<B>::dadd(const DElem& x,
                                                    const DElem& y) const {
  DElem r = x;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = base_.add(r.c[i], y.c[i]);
  return r;
}

template <class B>
typename InvAlgebraT<B>::DElem InvAlgebraT<B>::dsub(const DElem& x,
                                                    const DElem& y) const {
  return dadd(x, dneg(y));
}

template <class B>
typename InvAlgebraT<B>::DElem InvAlgebraT<B>::dneg(const DElem& x) const {
  DElem r = x;
  for (auto& v : r.c) v = base_.neg(v);
  return r;
}

template <class B>
typename InvAlgebraT<B>::DElem InvAlgebraT<B>::dmul(const DElem& x,
                                                    const DElem& y) const {
  const auto& K = base_;
  switch (kind_) {
    case DivisionKind::Base:
      return DElem{{K.mul(x.c[0], y.c[0])}};
    case DivisionKind::Quadratic: {
      // (x0 + x1 s)(y0 + y1 s) with s^2 = d.
      BElem r0 = K.add(K.mul(x.c[0], y.c[0]), K.mul(d_, K.mul(x.c[1], y.c[1])));
      BElem r1 = K.add(K.mul(x.c[0], y.c[1]), K.mul(x.c[1], y.c[0]));
      return DElem{{std::move(r0), std::move(r1)}};
    }
    case DivisionKind::Quaternion: {
      // Basis 1, i, j, k with i^2 = a, j^2 = b, ij = k = -ji.
      const BElem& a = qa_;
      const BElem& b = qb_;
      auto M = [&](const BElem& p, const BElem& q) { return K.mul(p, q); };
      BElem ab = K.mul(a, b);
      BElem r0 = K.add(K.add(M(x.c[0], y.c[0]), K.mul(a, M(x.c[1], y.c[1]))),
                       K.sub(K.mul(b, M(x.c[2], y.c[2])),
                             K.mul(ab, M(x.c[3], y.c[3]))));
      BElem r1 = K.add(K.add(M(x.c[0], y.c[1]), M(x.c[1], y.c[0])),
                       K.mul(b, K.sub(M(x.c[3], y.c[2]), M(x.c[2], y.c[3]))));
      BElem r2 = K.add(K.add(M(x.c[0], y.c[2]), M(x.c[2], y.c[0])),
                       K.mul(a, K.sub(M(x.c[1], y.c[3]), M(x.c[3], y.c[1]))));
      BElem r3 = K.add(K.add(M(x.c[0], y.c[3]), M(x.c[3], y.c[0])),
                       K.sub(M(x.c[1], y.c[2]), M(x.c[2], y.c[1])));
      return DElem{{std::move(r0), std::move(r1), std::move(r2), std::move(r3)}};
    }
  }
  throw std::logic_error("unreachable");
}

template <class B>
typename InvAlgebraT<B>::DElem InvAlgebraT<B>::dconj(const DElem& x) const {
  DElem r = x;
  for (std::size_t i = 1; i < r.c.size(); ++i) r.c[i] = base_.neg(r.c[i]);
  return r;
}

template <class B>
typename InvAlgebraT<B>::BElem InvAlgebraT<B>::dnorm(const DElem& x) const {
  DElem p = dmul(x, dconj(x));
  return p.c[0];
}

template <class B>
bool InvAlgebraT<B>::dis_unit(const DElem& x) const {
  if (kind_ == DivisionKind::Base) return base_.is_unit(x.c[0]);
  return base_.is_unit(dnorm(x));
}

template <class B>
typename InvAlgebraT<B>::DElem InvAlgebraT<B>::dinv(const DElem& x) const {
  if (kind_ == DivisionKind::Base)
    return DElem{{base_.inv(x.c[0])}};
  BElem nrm = dnorm(x);
  BElem ninv = base_.inv(nrm);  // throws NotAUnitError when not invertible
  DElem r = dconj(x);
  for (auto& v : r.c) v = base_.mul(v, ninv);
  return r;
}

template <class B>
bool InvAlgebraT<B>::dis_central(const DElem& x) const {
  for (std::size_t i = 1; i < x.c.size(); ++i)
    if (!base_.is_zero(x.c[i])) return false;
  return true;
}

template <class B>
std::string InvAlgebraT<B>::dstr(const DElem& x) const {
  if (x.c.size() == 1) return base_.str(x.c[0]);
  static const char* names[] = {"", "i", "j", "k"};
  std::string s = "[";
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (i) s += " + ";
    s += base_.str(x.c[i]);
    if (i > 0) s += (x.c.size() == 2 ? "s" : names[i]);
  }
  return s + "]";
}

template <class B>
typename InvAlgebraT<B>::AlgElem InvAlgebraT<B>::identity() const {
  AlgElem e = zero_elem();
  for (int i = 0; i < n_; ++i) e.at(i, i) = done();
  return e;
}

template <class B>
typename InvAlgebraT<B>::AlgElem InvAlgebraT<B>::scalar(const BElem& c) const {
  AlgElem e = zero_elem();
  for (int i = 0; i < n_; ++i) e.at(i, i) = dfrom_base(c);
  return e;
}

template <class B>
bool InvAlgebraT<B>::elem_is_zero(const AlgElem& x) const {
  for (const auto& e : x.a)
    if (!dis_zero(e)) return false;
  return true;
}

template <class B>
bool InvAlgebraT<B>::elem_eq(const AlgElem& x, const AlgElem& y) const {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    if (x.a[i].c.size() != y.a[i].c.size()) return false;
    for (std::size_t j = 0; j < x.a[i].c.size(); ++j)
      if (!base_.eq(x.a[i].c[j], y.a[i].c[j])) return false;
  }
  return true;
}

template <class B>
typename InvAlgebraT<B>::AlgElem InvAlgebraT<B>::add(const AlgElem& x,
                                                     const AlgElem& y) const {
  AlgElem r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = dadd(r.a[i], y.a[i]);
  return r;
}

template <class B>
typename InvAlgebraT<B>::AlgElem InvAlgebraT<B>::sub(const AlgElem& x,
                                                     const AlgElem& y) const {
  return add(x, neg(y));
}

template <class B>
typename InvAlgebraT<B>::AlgElem InvAlgebraT<B>::neg(const AlgElem& x) const {
  AlgElem r = x;
  for (auto& e : r.a) e = dneg(e);
  return r;
}

template <class B>
typename InvAlgebraT<B>::AlgElem InvAlgebraT<B>::mul(const AlgElem& x,
                                                     const AlgElem& y) const {
  AlgElem r(x.rows, y.cols, dzero());
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      DElem acc = dzero();
      for (int t = 0; t < x.cols; ++t)
        acc = dadd(acc, dmul(x.at(i, t), y.at(t, j)));
      r.at(i, j) = std::move(acc);
    }
  return r;
}

template <class B>
typename InvAlgebraT<B>::AlgElem InvAlgebraT<B>::mul_base(
    const BElem& c, const AlgElem& x) const {
  AlgElem r = x;
  for (auto& e : r.a)
    for (auto& v : e.c) v = base_.mul(c, v);
  return r;
}

template <class B>
typename InvAlgebraT<B>::AlgElem InvAlgebraT<B>::theta_transpose(
    const AlgElem& x) const {
  AlgElem r(x.cols, x.rows, dzero());
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      r.at(j, i) = kind_ == DivisionKind::Base ? x.at(i, j) : dconj(x.at(i, j));
  return r;
}

template <class B>
typename InvAlgebraT<B>::AlgElem InvAlgebraT<B>::involution(
    const AlgElem& x) const {
  return mul(twist_inv_, mul(theta_transpose(x), twist_));
}

template <class B>
Mat<typename InvAlgebraT<B>::DElem> InvAlgebraT<B>::dmat_inverse(
    Mat<DElem> m) const {
  if (!m.square()) throw std::domain_error("inverse of non-square matrix");
  const int nn = m.rows;
  Mat<DElem> inv(nn, nn, dzero());
  for (int i = 0; i < nn; ++i) inv.at(i, i) = done();
  for (int c = 0; c < nn; ++c) {
    int pivot = -1;
    for (int r = c; r < nn; ++r)
      if (dis_unit(m.at(r, c))) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw NotAUnitError("matrix over D is not invertible");
    if (pivot != c)
      for (int j = 0; j < nn; ++j) {
        std::swap(m.at(pivot, j), m.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    const DElem ip = dinv(m.at(c, c));
    for (int j = 0; j < nn; ++j) {
      m.at(c, j) = dmul(ip, m.at(c, j));
      inv.at(c, j) = dmul(ip, inv.at(c, j));
    }
    for (int r = 0; r < nn; ++r) {
      if (r == c || dis_zero(m.at(r, c))) continue;
      const DElem f = m.at(r, c);
      for (int j = 0; j < nn; ++j) {
        m.at(r, j) = dsub(m.at(r, j), dmul(f, m.at(c, j)));
        inv.at(r, j) = dsub(inv.at(r, j), dmul(f, inv.at(c, j)));
      }
    }
  }
  return inv;
}

template <class B>
InvolutionType InvAlgebraT<B>::type_at(const Ord& ord) const {
  switch (kind_) {
    case DivisionKind::Quadratic: {
      int s = base_.sign_at(d_, ord);
      if (s == 0)
        throw std::domain_error("quadratic discriminant vanishes at ordering");
      return s < 0 ? InvolutionType::Unitary : InvolutionType::UnitarySplit;
    }
    case DivisionKind::Base:
      return twist_sign_ > 0 ? InvolutionType::Orthogonal
                             : InvolutionType::Symplectic;
    case DivisionKind::Quaternion:
      return twist_sign_ > 0 ? InvolutionType::Symplectic
                             : InvolutionType::Orthogonal;
  }
  throw std::logic_error("unreachable");
}

template <class B>
bool InvAlgebraT<B>::split_at(const Ord& ord) const {
  switch (kind_) {
    case DivisionKind::Base:
    case DivisionKind::Quadratic:
      return true;
    case DivisionKind::Quaternion:
      return base_.sign_at(qa_, ord) > 0 || base_.sign_at(qb_, ord) > 0;
  }
  return true;
}

template <class B>
bool InvAlgebraT<B>::is_nil_at(const Ord& ord) const {
  switch (type_at(ord)) {
    case InvolutionType::UnitarySplit:
      return true;
    case InvolutionType::Unitary:
      return false;
    case InvolutionType::Symplectic:
      return split_at(ord);
    case InvolutionType::Orthogonal:
      return !split_at(ord);
  }
  return false;
}

template <class B>
std::string InvAlgebraT<B>::center_description() const {
  switch (kind_) {
    case DivisionKind::Base:
    case DivisionKind::Quaternion:
      return "base";
    case DivisionKind::Quadratic:
      return "base(sqrt(d))";
  }
  return "base";
}

template <class B>
std::string InvAlgebraT<B>::elem_str(const AlgElem& x) const {
  std::string s = "[";
  for (int i = 0; i < x.rows; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < x.cols; ++j) {
      if (j) s += ", ";
      s += dstr(x.at(i, j));
    }
  }
  return s + "]";
}

}  // namespace formsig
