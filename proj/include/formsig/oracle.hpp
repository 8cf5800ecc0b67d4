#pragma once

// Independent real-root counting oracle for cross-checking the Sturm
// machinery: bisection driven by Descartes' rule of signs (the classical
// Vincent-Collins-Akritas scheme). Exact rational arithmetic, no Sturm
// chains, no gcds.

#include "formsig/poly.hpp"

#include <utility>
#include <vector>

namespace formsig::testing {

// All real roots of p lie in (-B, B) for this B (Cauchy's bound).
inline Rational oracle_root_bound(const UniPoly& p) {
  Rational m(0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational a = abs_of(p[i]) / abs_of(p.back());
    if (a > m) m = a;
  }
  return m + 1;
}

// Number of sign variations in the coefficient list.
inline int coeff_variations(const UniPoly& p) {
  int var = 0, prev = 0;
  for (const auto& c : p) {
    int s = sign_of(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Descartes bound for the number of roots of p in the open interval (a, b):
// map (a, b) onto (0, inf) via x -> (a + b y)/(1 + y) and count coefficient
// sign variations. The bound is exact when it is 0 or 1.
inline int descartes_bound(const UniPoly& p, const Rational& a, const Rational& b) {
  RationalField qq;
  const int n = poly_deg(p);
  // q(y) = (1 + y)^n * p((a + b y)/(1 + y)), built by Horner on
  // p = sum c_i x^i with x = (a + b y)/(1 + y).
  UniPoly acc;             // accumulates, degree grows with each step
  UniPoly num = {a, b};    // a + b y
  UniPoly den = {Rational(1), Rational(1)};  // 1 + y
  for (int i = n; i >= 0; --i) {
    acc = poly_mul(qq, acc, num);
    UniPoly t = poly_constant(qq, p[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n - i; ++j) t = poly_mul(qq, t, den);
    acc = poly_add(qq, acc, t);
  }
  return coeff_variations(acc);
}

// Exact number of roots of squarefree p in the open interval (a, b).
inline long oracle_count_open(const UniPoly& p, const Rational& a,
                              const Rational& b) {
  RationalField qq;
  if (!(a < b)) return 0;
  int bound = descartes_bound(p, a, b);
  if (bound == 0) return 0;
  if (bound == 1) return 1;
  Rational mid = (a + b) / 2;
  long at_mid = qq.is_zero(poly_eval_rational(qq, p, mid)) ? 1 : 0;
  return oracle_count_open(p, a, mid) + at_mid + oracle_count_open(p, mid, b);
}

// Number of roots of squarefree p in (lo, hi], matching the library's
// half-open convention. Infinite bounds pass std::nullopt-like flags via
// the overload below.
inline long oracle_count_halfopen(const UniPoly& p, const Rational& lo,
                                  const Rational& hi) {
  RationalField qq;
  long boundary = qq.is_zero(poly_eval_rational(qq, p, hi)) ? 1 : 0;
  return oracle_count_open(p, lo, hi) + boundary;
}

inline long oracle_count_all(const UniPoly& p) {
  Rational b = oracle_root_bound(p);
  return oracle_count_halfopen(p, -b, b);
}

}  // namespace formsig::testing
