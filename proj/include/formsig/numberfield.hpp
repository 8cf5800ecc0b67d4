#pragma once

// Number fields Q[x]/(g) as field contexts, and their orderings given by a
// real root of g. Elements are residues reduced mod g, so representation is
// canonical and structural zero tests are value zero tests.
//
// g is taken to be irreducible on the caller's say-so (factorization over Q
// is out of scope). If a nonzero residue turns out to be non-invertible the
// assertion was wrong and inversion reports it.

#include "formsig/poly.hpp"
#include "formsig/roots.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace formsig {

struct NotAUnitError : std::domain_error {
  explicit NotAUnitError(const std::string& what) : std::domain_error(what) {}
};

class NumberField {
 public:
  using Elem = UniPoly;  // residue mod modulus_, degree < deg(modulus_)

  NumberField() : modulus_(unipoly_from_ints({0, 1})) {}  // Q itself
  explicit NumberField(UniPoly modulus) : modulus_(std::move(modulus)) {
    if (poly_deg(modulus_) < 1)
      throw std::domain_error("number field modulus must have degree >= 1");
  }

  const UniPoly& modulus() const { return modulus_; }
  int degree() const { return poly_deg(modulus_); }

  Elem zero() const { return {}; }
  Elem one() const { return {Rational(1)}; }
  Elem from_int(long long n) const {
    return n == 0 ? Elem{} : Elem{Rational(n)};
  }
  Elem from_rational(const Rational& r) const {
    return r.is_zero() ? Elem{} : Elem{r};
  }
  Elem generator() const { return reduce({Rational(0), Rational(1)}); }

  Elem reduce(const UniPoly& p) const { return poly_mod(qq_, p, modulus_); }

  bool is_zero(const Elem& a) const { return a.empty(); }
  bool eq(const Elem& a, const Elem& b) const { return poly_eq(qq_, a, b); }

  Elem add(const Elem& a, const Elem& b) const { return poly_add(qq_, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly_sub(qq_, a, b); }
  Elem neg(const Elem& a) const { return poly_neg(qq_, a); }
  Elem mul(const Elem& a, const Elem& b) const {
    return reduce(poly_mul(qq_, a, b));
  }

  bool is_unit(const Elem& a) const {
    if (a.empty()) return false;
    return poly_deg(poly_gcd(qq_, a, modulus_)) == 0;
  }

  // Extended Euclid against the modulus. A nonzero non-unit means the
  // modulus is not irreducible (or, in quotient-ring use, that the element
  // is a zero divisor).
  Elem inv(const Elem& a) const {
    if (a.empty()) throw NotAUnitError("inverse of zero");
    UniPoly r0 = modulus_, r1 = a;
    UniPoly t0 = {}, t1 = {Rational(1)};
    while (!r1.empty()) {
      auto [q, r] = poly_divmod(qq_, r0, r1);
      UniPoly t2 = poly_sub(qq_, t0, poly_mul(qq_, q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (poly_deg(r0) != 0)
      throw NotAUnitError("not a unit: gcd with modulus is " +
                          unipoly_to_string(r0));
    return reduce(poly_scale(qq_, t0, qq_.inv(r0[0])));
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  std::string str(const Elem& a) const { return unipoly_to_string(a); }

 private:
  UniPoly modulus_;
  RationalField qq_;
};

// A number field together with a real embedding: the ordered field k(alpha).
// Satisfies the same context interface plus sign().
class OrderedNumberField {
 public:
  using Elem = NumberField::Elem;

  OrderedNumberField(NumberField field, RealAlgebraic theta)
      : field_(std::move(field)), theta_(std::move(theta)) {
    if (!poly_eq(RationalField{}, theta_.defining, field_.modulus()))
      throw std::domain_error("embedding root does not define the field");
  }

  const NumberField& field() const { return field_; }
  const RealAlgebraic& embedding() const { return theta_; }

  Elem zero() const { return field_.zero(); }
  Elem one() const { return field_.one(); }
  Elem from_int(long long n) const { return field_.from_int(n); }
  Elem from_rational(const Rational& r) const { return field_.from_rational(r); }
  bool is_zero(const Elem& a) const { return field_.is_zero(a); }
  bool eq(const Elem& a, const Elem& b) const { return field_.eq(a, b); }
  Elem add(const Elem& a, const Elem& b) const { return field_.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return field_.sub(a, b); }
  Elem neg(const Elem& a) const { return field_.neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return field_.mul(a, b); }
  Elem inv(const Elem& a) const { return field_.inv(a); }
  Elem div(const Elem& a, const Elem& b) const { return field_.div(a, b); }
  bool is_unit(const Elem& a) const { return field_.is_unit(a); }
  std::string str(const Elem& a) const { return field_.str(a); }

  int sign(const Elem& a) const {
    if (a.empty()) return 0;
    return sign_at(a, theta_);
  }

 private:
  NumberField field_;
  RealAlgebraic theta_;
};

}  // namespace formsig
