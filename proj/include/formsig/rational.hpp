#pragma once

// Exact arbitrary-precision rational arithmetic. Rationals are kept in
// canonical form (positive denominator, reduced) by the backing type, so
// structural equality is value equality. No floating point is used anywhere
// in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace formsig {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const Integer& n) { return n.sign(); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

// gcd on nonnegative rationals: the largest g with both arguments integer
// multiples of g. gcd(x, 0) = x.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return abs_of(b);
  if (b.is_zero()) return abs_of(a);
  Integer num = boost::multiprecision::gcd(
      rat_num(abs_of(a)) * rat_den(b), rat_num(abs_of(b)) * rat_den(a));
  return Rational(num, rat_den(a) * rat_den(b));
}

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or zero denominator.
Rational rational_from_string(const std::string& s);

// Renders as "p" or "p/q", matching the scenario file syntax.
std::string rational_to_string(const Rational& r);

// The rational field as an ordered-field context for the generic polynomial
// machinery. Contexts carry the structure; elements are plain values.
struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long long n) const { return Rational(n); }
  Elem from_rational(const Rational& r) const { return r; }

  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a.is_zero()) throw std::domain_error("division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  int sign(const Elem& a) const { return a.sign(); }

  std::string str(const Elem& a) const { return rational_to_string(a); }
};

}  // namespace formsig
