#pragma once

// Finite etale Q-algebras presented as products of monogenic factors
// Q[x]/(g_i), their elements, trace, and orderings (real spectrum points).
//
// Factors are machine-checked to be monic and squarefree; irreducibility is
// asserted by the caller. Operations that genuinely need a field (inverses,
// pivoting) surface a violated assertion as NotAUnitError instead of
// producing junk: etale products legitimately contain zero divisors.

#include "formsig/numberfield.hpp"
#include "formsig/poly.hpp"
#include "formsig/roots.hpp"

#include <string>
#include <utility>
#include <vector>

namespace formsig {

struct EtaleElement {
  std::vector<UniPoly> parts;  // parts[i] reduced mod factors[i]

  bool operator==(const EtaleElement& o) const {
    if (parts.size() != o.parts.size()) return false;
    RationalField qq;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!poly_eq(qq, parts[i], o.parts[i])) return false;
    return true;
  }
};

// An ordering of the algebra: a real root of one factor.
struct Ordering {
  int factor_index = 0;
  RealAlgebraic root;
};

class EtaleAlgebra {
 public:
  using Elem = EtaleElement;
  using Ord = Ordering;

  explicit EtaleAlgebra(std::vector<UniPoly> factors);

  // The rationals, as the one-factor algebra Q[x]/(x).
  static EtaleAlgebra rationals();

  const std::vector<UniPoly>& factors() const { return factors_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  int rank() const { return rank_; }

  bool operator==(const EtaleAlgebra& o) const;

  // --- element construction -------------------------------------------
  Elem zero() const;
  Elem one() const;
  Elem from_int(long long n) const;
  Elem from_rational(const Rational& r) const;
  // The same polynomial reduced into every factor (e.g. the generator x).
  Elem embed_poly(const UniPoly& p) const;
  Elem generator() const { return embed_poly({Rational(0), Rational(1)}); }
  // Per-factor construction; the outer vector must match factor_count().
  Elem from_parts(std::vector<UniPoly> parts) const;

  // --- ring operations --------------------------------------------------
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_unit(const Elem& a) const;
  Elem inv(const Elem& a) const;  // throws NotAUnitError on zero divisors

  // --- trace ------------------------------------------------------------
  // Trace of the left regular representation, summed over factors.
  Rational trace(const Elem& a) const;

  // --- orderings ---------------------------------------------------------
  // All orderings, sorted by (factor index, root position).
  const std::vector<Ordering>& orderings() const { return orderings_; }
  bool same_ordering(const Ordering& a, const Ordering& b) const;
  int ordering_index(const Ordering& o) const;

  int sign_at(const Elem& a, const Ordering& o) const;
  bool is_zero_at(const Elem& a, const Ordering& o) const {
    return sign_at(a, o) == 0;
  }

  // gcd of the absolute values of all rational coefficients; 0 for zero.
  Rational content(const Elem& a) const {
    Rational g(0);
    for (const auto& p : a.parts)
      for (const auto& c : p) g = rational_gcd(g, c);
    return g;
  }

  NumberField factor_field(int i) const { return NumberField(factors_[i]); }
  OrderedNumberField ordered_field(const Ordering& o) const {
    return OrderedNumberField(factor_field(o.factor_index), o.root);
  }

  std::string str(const Elem& a) const;

 private:
  std::vector<UniPoly> factors_;
  std::vector<Ordering> orderings_;
  int rank_ = 0;
};

// Product algebra: concatenates the factor lists.
EtaleAlgebra etale_product(const EtaleAlgebra& a, const EtaleAlgebra& b);

// Element of the product from components.
EtaleElement elem_concat(const EtaleElement& a, const EtaleElement& b);

}  // namespace formsig
