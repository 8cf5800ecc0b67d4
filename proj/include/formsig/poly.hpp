#pragma once

// Dense univariate polynomials over an abstract field context F.
//
// A polynomial is a coefficient vector, lowest degree first, normalized so
// that it is either empty (the zero polynomial) or its last coefficient is
// nonzero. The field context supplies all arithmetic, which lets the same
// code run over the rationals and over number fields.

#include "formsig/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace formsig {

template <class F>
using PolyOf = std::vector<typename F::Elem>;

using UniPoly = PolyOf<RationalField>;

template <class F>
PolyOf<F> poly_normalize(const F& k, PolyOf<F> p) {
  while (!p.empty() && k.is_zero(p.back())) p.pop_back();
  return p;
}

template <class E>
bool poly_is_zero(const std::vector<E>& p) {
  return p.empty();
}

// Degree of the zero polynomial is -1.
template <class E>
int poly_deg(const std::vector<E>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class F>
typename F::Elem poly_lead(const F& k, const PolyOf<F>& p) {
  if (p.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  (void)k;
  return p.back();
}

template <class F>
PolyOf<F> poly_constant(const F& k, const typename F::Elem& c) {
  if (k.is_zero(c)) return {};
  return {c};
}

template <class F>
PolyOf<F> poly_x(const F& k) {
  return {k.zero(), k.one()};
}

template <class F>
bool poly_eq(const F& k, const PolyOf<F>& a, const PolyOf<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!k.eq(a[i], b[i])) return false;
  return true;
}

template <class F>
PolyOf<F> poly_add(const F& k, const PolyOf<F>& a, const PolyOf<F>& b) {
  PolyOf<F> r(std::max(a.size(), b.size()), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
  return poly_normalize(k, std::move(r));
}

template <class F>
PolyOf<F> poly_neg(const F& k, const PolyOf<F>& a) {
  PolyOf<F> r = a;
  for (auto& c : r) c = k.neg(c);
  return r;
}

template <class F>
PolyOf<F> poly_sub(const F& k, const PolyOf<F>& a, const PolyOf<F>& b) {
  return poly_add(k, a, poly_neg(k, b));
}

template <class F>
PolyOf<F> poly_mul(const F& k, const PolyOf<F>& a, const PolyOf<F>& b) {
  if (a.empty() || b.empty()) return {};
  PolyOf<F> r(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  return poly_normalize(k, std::move(r));
}

template <class F>
PolyOf<F> poly_scale(const F& k, const PolyOf<F>& a, const typename F::Elem& c) {
  if (k.is_zero(c)) return {};
  PolyOf<F> r = a;
  for (auto& x : r) x = k.mul(x, c);
  return r;
}

// Euclidean division; the divisor's leading coefficient must be invertible.
template <class F>
std::pair<PolyOf<F>, PolyOf<F>> poly_divmod(const F& k, const PolyOf<F>& a,
                                            const PolyOf<F>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  PolyOf<F> rem = a;
  if (a.size() < b.size()) return {{}, rem};
  const typename F::Elem lead_inv = k.inv(b.back());
  PolyOf<F> quot(a.size() - b.size() + 1, k.zero());
  for (int i = static_cast<int>(rem.size()) - 1;
       i >= static_cast<int>(b.size()) - 1; --i) {
    if (k.is_zero(rem[i])) continue;
    const typename F::Elem c = k.mul(rem[i], lead_inv);
    const int shift = i - (static_cast<int>(b.size()) - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[shift + j] = k.sub(rem[shift + j], k.mul(c, b[j]));
    }
  }
  return {poly_normalize(k, std::move(quot)), poly_normalize(k, std::move(rem))};
}

template <class F>
PolyOf<F> poly_mod(const F& k, const PolyOf<F>& a, const PolyOf<F>& b) {
  return poly_divmod(k, a, b).second;
}

template <class F>
PolyOf<F> poly_derivative(const F& k, const PolyOf<F>& p) {
  if (p.size() <= 1) return {};
  PolyOf<F> r(p.size() - 1, k.zero());
  for (std::size_t i = 1; i < p.size(); ++i)
    r[i - 1] = k.mul(p[i], k.from_int(static_cast<long long>(i)));
  return poly_normalize(k, std::move(r));
}

template <class F>
PolyOf<F> poly_make_monic(const F& k, const PolyOf<F>& p) {
  if (p.empty()) return p;
  return poly_scale(k, p, k.inv(p.back()));
}

// Monic gcd via the Euclidean algorithm.
template <class F>
PolyOf<F> poly_gcd(const F& k, PolyOf<F> a, PolyOf<F> b) {
  while (!b.empty()) {
    PolyOf<F> r = poly_mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(k, a);
}

template <class F>
PolyOf<F> poly_squarefree_part(const F& k, const PolyOf<F>& p) {
  if (p.empty()) throw std::domain_error("squarefree part of zero polynomial");
  PolyOf<F> g = poly_gcd(k, p, poly_derivative(k, p));
  if (poly_deg(g) == 0) return p;
  return poly_divmod(k, p, g).first;
}

template <class F>
typename F::Elem poly_eval(const F& k, const PolyOf<F>& p,
                           const typename F::Elem& x) {
  typename F::Elem acc = k.zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = k.add(k.mul(acc, x), *it);
  return acc;
}

template <class F>
typename F::Elem poly_eval_rational(const F& k, const PolyOf<F>& p,
                                    const Rational& q) {
  return poly_eval(k, p, k.from_rational(q));
}

// Substitutes q(x) into p, i.e. computes p(q(x)).
template <class F>
PolyOf<F> poly_compose(const F& k, const PolyOf<F>& p, const PolyOf<F>& q) {
  PolyOf<F> acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = poly_mul(k, acc, q);
    acc = poly_add(k, acc, poly_constant(k, *it));
  }
  return acc;
}

inline UniPoly unipoly_from_ints(std::initializer_list<long long> cs) {
  RationalField qq;
  UniPoly p;
  p.reserve(cs.size());
  for (long long c : cs) p.push_back(Rational(c));
  return poly_normalize(qq, std::move(p));
}

std::string unipoly_to_string(const UniPoly& p);

}  // namespace formsig
