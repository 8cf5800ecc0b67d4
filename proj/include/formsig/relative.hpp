#pragma once

// A finite etale extension of an etale base algebra, presented by a monic
// polynomial f in K[y], together with its total algebra T = K[y]/(f).
//
// Orderings of T over a base ordering alpha are real roots of the image of
// f under the real embedding attached to alpha. They are computed with
// Sturm chains whose coefficients live in the base number field, with signs
// decided at alpha's root; no primitive element or resultant is ever formed.

#include "formsig/etale.hpp"

#include <string>
#include <vector>

namespace formsig {

// Element of the total algebra: a polynomial in y over the base, reduced
// mod the (monic) extension polynomial. Representation is canonical.
struct TotalElement {
  std::vector<EtaleElement> coeffs;  // lowest y-degree first

  bool operator==(const TotalElement& o) const { return coeffs == o.coeffs; }
};

// An ordering of the total algebra: a base ordering together with a real
// root of the extension polynomial at it.
struct RelOrdering {
  Ordering base;
  AlgebraicRootT<OrderedNumberField> root;
};

class RelativeEtale {
 public:
  using Elem = TotalElement;
  using Ord = RelOrdering;

  // f given by its coefficients in the base, lowest degree first; must be
  // monic of degree >= 1 and separable in every base factor.
  RelativeEtale(EtaleAlgebra base, std::vector<EtaleElement> f);

  const EtaleAlgebra& base() const { return base_; }
  const std::vector<EtaleElement>& rel_poly() const { return f_; }
  int rel_degree() const { return static_cast<int>(f_.size()) - 1; }
  int rank_over_rationals() const { return rel_degree() * base_.rank(); }

  bool operator==(const RelativeEtale& o) const {
    return base_ == o.base_ && f_ == o.f_;
  }

  // --- element construction -------------------------------------------
  Elem zero() const;
  Elem one() const;
  Elem from_int(long long n) const;
  Elem from_rational(const Rational& r) const;
  Elem embed(const EtaleElement& e) const;  // base -> total
  Elem generator() const;                   // the class of y
  Elem from_coeffs(std::vector<EtaleElement> coeffs) const;

  // --- ring operations --------------------------------------------------
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_unit(const Elem& a) const;
  Elem inv(const Elem& a) const;  // throws NotAUnitError on zero divisors

  // --- trace down to the base -------------------------------------------
  // Trace of multiplication by a on the power basis 1, y, ..., y^(t-1).
  EtaleElement trace_down(const Elem& a) const;

  // --- orderings ---------------------------------------------------------
  // The extensions of a base ordering, sorted by root position.
  std::vector<RelOrdering> extensions_of(const Ordering& alpha) const;
  // All orderings: extensions of each base ordering, in base order.
  std::vector<RelOrdering> orderings() const;

  int sign_at(const Elem& a, const RelOrdering& o) const;
  bool is_zero_at(const Elem& a, const RelOrdering& o) const {
    return sign_at(a, o) == 0;
  }

  Rational content(const Elem& a) const {
    Rational g(0);
    for (const auto& c : a.coeffs) g = rational_gcd(g, base_.content(c));
    return g;
  }

  // True iff every base element positive at alpha is positive at gamma,
  // i.e. gamma restricts to alpha.
  bool pullback_check(const RelOrdering& gamma, const Ordering& alpha) const;

  // The image of f (and of elements) in base factor i, as a polynomial in y
  // over the factor's number field.
  PolyOf<NumberField> project_poly(const std::vector<EtaleElement>& c, int i) const;
  PolyOf<NumberField> project(const Elem& a, int i) const;

  std::string str(const Elem& a) const;

 private:
  EtaleAlgebra base_;
  std::vector<EtaleElement> f_;

  std::vector<EtaleElement> reduce(std::vector<EtaleElement> c) const;
};

}  // namespace formsig
