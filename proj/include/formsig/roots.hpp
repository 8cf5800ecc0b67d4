#pragma once

// Sturm chains, real root counting and isolation, and exact sign
// determination at real algebraic points, over any ordered field context.
//
// The interval conventions are: root counting is over the half-open
// interval (lo, hi], which makes counts additive over splits; an isolated
// root is stored with a closed interval [lo, hi] that contains exactly one
// root of its squarefree defining polynomial. lo == hi marks a root known
// exactly (a rational point, for the base instantiation).

#include "formsig/poly.hpp"

#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace formsig {

// An interval endpoint: a rational number or one of the infinities.
struct Bound {
  enum Kind { NegInf, Finite, PosInf };
  Kind kind = Finite;
  Rational value;

  static Bound neg_inf() { return {NegInf, Rational(0)}; }
  static Bound pos_inf() { return {PosInf, Rational(0)}; }
  static Bound at(Rational q) { return {Finite, std::move(q)}; }
};

template <class F>
struct SturmSeqT {
  std::vector<PolyOf<F>> polys;
};

using SturmChain = SturmSeqT<RationalField>;

template <class F>
bool poly_is_squarefree(const F& k, const PolyOf<F>& p) {
  if (p.empty()) throw std::domain_error("squarefree test on zero polynomial");
  return poly_deg(poly_gcd(k, p, poly_derivative(k, p))) == 0;
}

// The literal negative-remainder sequence of (p, p'). Requires p squarefree,
// so the chain terminates in a nonzero constant.
template <class F>
SturmSeqT<F> sturm_chain_of(const F& k, const PolyOf<F>& p) {
  if (p.empty()) throw std::domain_error("Sturm chain of zero polynomial");
  if (!poly_is_squarefree(k, p))
    throw std::domain_error("Sturm chain requires a squarefree polynomial");
  SturmSeqT<F> chain;
  chain.polys.push_back(p);
  PolyOf<F> d = poly_derivative(k, p);
  if (d.empty()) return chain;  // degree-0 case
  chain.polys.push_back(d);
  while (poly_deg(chain.polys.back()) > 0) {
    const PolyOf<F>& a = chain.polys[chain.polys.size() - 2];
    const PolyOf<F>& b = chain.polys.back();
    PolyOf<F> r = poly_neg(k, poly_mod(k, a, b));
    if (r.empty()) throw std::domain_error("Sturm chain hit a zero remainder");
    chain.polys.push_back(std::move(r));
  }
  return chain;
}

// Sign of a chain member at an endpoint; at the infinities the sign is read
// off the leading coefficient and degree parity.
template <class F>
int chain_sign_at(const F& k, const PolyOf<F>& p, const Bound& b) {
  if (p.empty()) return 0;
  switch (b.kind) {
    case Bound::Finite:
      return k.sign(poly_eval_rational(k, p, b.value));
    case Bound::PosInf:
      return k.sign(p.back());
    case Bound::NegInf: {
      int s = k.sign(p.back());
      return (poly_deg(p) % 2 == 0) ? s : -s;
    }
  }
  return 0;
}

template <class F>
int sign_variations_at(const F& k, const SturmSeqT<F>& chain, const Bound& b) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain.polys) {
    int s = chain_sign_at(k, p, b);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

// Number of real roots of the chain's polynomial in (lo, hi].
template <class F>
long count_real_roots_chain(const F& k, const SturmSeqT<F>& chain,
                            const Bound& lo, const Bound& hi) {
  return sign_variations_at(k, chain, lo) - sign_variations_at(k, chain, hi);
}

template <class F>
long count_real_roots_of(const F& k, const PolyOf<F>& p, const Bound& lo,
                         const Bound& hi) {
  if (lo.kind == Bound::Finite && hi.kind == Bound::Finite && !(lo.value < hi.value))
    throw std::domain_error("root counting requires lo < hi");
  return count_real_roots_chain(k, sturm_chain_of(k, p), lo, hi);
}

// A real algebraic number: the unique root of `defining` in [lo, hi].
template <class F>
struct AlgebraicRootT {
  PolyOf<F> defining;  // squarefree
  Rational lo, hi;

  bool is_exact() const { return lo == hi; }
};

using RealAlgebraic = AlgebraicRootT<RationalField>;

namespace detail {

// Starting bound for bisection. Over the rationals this is the Cauchy bound
// 1 + max|c_i| / |lead|; over other coefficient fields a power of two is
// grown until the count certifies that every real root is enclosed.
template <class F>
Rational isolation_bound(const F& k, const SturmSeqT<F>& chain, long total) {
  Rational b(1);
  if constexpr (std::is_same_v<F, RationalField>) {
    const PolyOf<F>& p = chain.polys.front();
    Rational m(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      Rational a = abs_of(p[i]) / abs_of(p.back());
      if (a > m) m = a;
    }
    return m + 1;
  }
  while (count_real_roots_chain(k, chain, Bound::at(-b), Bound::at(b)) != total)
    b *= 2;
  return b;
}

}  // namespace detail

// Isolates all real roots, ascending, with pairwise disjoint closed
// intervals. Exact roots are returned as width-zero intervals; all other
// intervals have nonvanishing `defining` at both endpoints.
template <class F>
std::vector<AlgebraicRootT<F>> isolate_real_roots_of(const F& k,
                                                     const PolyOf<F>& p) {
  SturmSeqT<F> chain = sturm_chain_of(k, p);
  const long total =
      count_real_roots_chain(k, chain, Bound::neg_inf(), Bound::pos_inf());
  std::vector<AlgebraicRootT<F>> roots;
  if (total == 0) return roots;
  const Rational b = detail::isolation_bound(k, chain, total);

  auto vanishes = [&](const Rational& q) {
    return k.is_zero(poly_eval_rational(k, p, q));
  };

  // Depth-first over (lo, hi] keeps the output sorted ascending.
  struct Seg {
    Rational lo, hi;
    long count;
  };
  std::vector<Seg> stack;
  stack.push_back({-b, b, total});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      Rational lo = s.lo, hi = s.hi;
      if (vanishes(hi)) {
        roots.push_back({p, hi, hi});
        continue;
      }
      // Shrink until the left endpoint is not a root, so the closed
      // interval contains exactly the one isolated root.
      while (vanishes(lo)) {
        Rational mid = (lo + hi) / 2;
        if (vanishes(mid)) {
          lo = hi = mid;
          break;
        }
        if (count_real_roots_chain(k, chain, Bound::at(lo), Bound::at(mid)) == 1)
          hi = mid;
        else
          lo = mid;
      }
      roots.push_back({p, lo, hi});
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    long left = count_real_roots_chain(k, chain, Bound::at(s.lo), Bound::at(mid));
    // Push right first: the left segment is processed first.
    stack.push_back({mid, s.hi, s.count - left});
    stack.push_back({s.lo, mid, left});
  }
  // Adjacent bisection segments share endpoints; shrink until the closed
  // intervals are pairwise disjoint.
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    while (!(roots[i].hi < roots[i + 1].lo)) {
      if (!roots[i].is_exact())
        roots[i] = refine_root(k, roots[i], (roots[i].hi - roots[i].lo) / 2);
      if (!roots[i + 1].is_exact())
        roots[i + 1] =
            refine_root(k, roots[i + 1], (roots[i + 1].hi - roots[i + 1].lo) / 2);
    }
  }
  return roots;
}

// Shrinks the isolating interval to width <= `width`; the root is unchanged.
template <class F>
AlgebraicRootT<F> refine_root(const F& k, AlgebraicRootT<F> r,
                              const Rational& width) {
  if (width <= 0) throw std::domain_error("refine requires positive width");
  if (r.is_exact()) return r;
  SturmSeqT<F> chain = sturm_chain_of(k, r.defining);
  while (r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / 2;
    if (k.is_zero(poly_eval_rational(k, r.defining, mid))) {
      r.lo = r.hi = mid;
      return r;
    }
    if (count_real_roots_chain(k, chain, Bound::at(r.lo), Bound::at(mid)) == 1)
      r.hi = mid;
    else
      r.lo = mid;
  }
  return r;
}

// Exact sign of g at the algebraic point. Zero is decided symbolically via
// gcd with the defining polynomial, so the refinement loop always terminates.
template <class F>
int sign_at_root(const F& k, const PolyOf<F>& g, const AlgebraicRootT<F>& r) {
  if (g.empty()) return 0;
  if (r.is_exact()) return k.sign(poly_eval_rational(k, g, r.lo));

  PolyOf<F> common = poly_gcd(k, g, r.defining);
  if (poly_deg(common) > 0) {
    // Roots of `common` are roots of `defining`; the only candidate in the
    // isolating interval is r itself.
    if (count_real_roots_of(k, common, Bound::at(r.lo), Bound::at(r.hi)) > 0)
      return 0;
  }

  // g(r) != 0 now; certify a root-free interval, then read the sign at an
  // endpoint.
  PolyOf<F> gs = poly_squarefree_part(k, g);
  SturmSeqT<F> g_chain = sturm_chain_of(k, gs);
  SturmSeqT<F> p_chain = sturm_chain_of(k, r.defining);
  Rational lo = r.lo, hi = r.hi;
  for (;;) {
    int s_lo = k.sign(poly_eval_rational(k, g, lo));
    if (s_lo != 0 &&
        count_real_roots_chain(k, g_chain, Bound::at(lo), Bound::at(hi)) == 0)
      return s_lo;
    Rational mid = (lo + hi) / 2;
    if (k.is_zero(poly_eval_rational(k, r.defining, mid))) {
      return k.sign(poly_eval_rational(k, g, mid));
    }
    if (count_real_roots_chain(k, p_chain, Bound::at(lo), Bound::at(mid)) == 1)
      hi = mid;
    else
      lo = mid;
  }
}

// Equality of two roots of the same squarefree defining polynomial.
template <class F>
bool roots_equal(const F& k, const AlgebraicRootT<F>& a,
                 const AlgebraicRootT<F>& b) {
  if (!poly_eq(k, a.defining, b.defining))
    throw std::domain_error("root comparison requires a common defining polynomial");
  const Rational lo = std::max(a.lo, b.lo);
  const Rational hi = std::min(a.hi, b.hi);
  if (lo > hi) return false;
  if (a.is_exact()) return b.lo <= a.lo && a.lo <= b.hi;
  if (b.is_exact()) return a.lo <= b.lo && b.lo <= a.hi;
  if (lo == hi) return !k.is_zero(poly_eval_rational(k, a.defining, lo)) ? false : true;
  // Neither endpoint of the intersection is a root (isolation invariant),
  // so a shared root would be interior and counted here.
  return count_real_roots_of(k, a.defining, Bound::at(lo), Bound::at(hi)) > 0;
}

// Strict total order on roots of a common defining polynomial:
// -1 if a < b, 0 if equal, +1 if a > b.
template <class F>
int compare_roots(const F& k, AlgebraicRootT<F> a, AlgebraicRootT<F> b) {
  if (roots_equal(k, a, b)) return 0;
  while (true) {
    if (a.hi < b.lo) return -1;
    if (b.hi < a.lo) return 1;
    Rational wa = a.hi - a.lo, wb = b.hi - b.lo;
    Rational target = (wa > wb ? wa : wb) / 2;
    if (target == 0) {
      // Both exact and distinct.
      return a.lo < b.lo ? -1 : 1;
    }
    a = refine_root(k, std::move(a), target);
    b = refine_root(k, std::move(b), target);
  }
}

// ---------------------------------------------------------------------------
// The concrete rational-coefficient API.

bool squarefree_check(const UniPoly& p);
SturmChain sturm_chain(const UniPoly& p);
long count_real_roots(const UniPoly& p, const Bound& lo, const Bound& hi);
std::vector<RealAlgebraic> isolate_real_roots(const UniPoly& p);
RealAlgebraic refine(const RealAlgebraic& r, const Rational& width);
int sign_at(const UniPoly& g, const RealAlgebraic& r);

}  // namespace formsig
