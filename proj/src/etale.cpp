#include "formsig/etale.hpp"

#include <stdexcept>

namespace formsig {

namespace {
const RationalField qq;
}

EtaleAlgebra::EtaleAlgebra(std::vector<UniPoly> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty())
    throw std::domain_error("etale algebra needs at least one factor");
  for (const auto& f : factors_) {
    if (poly_deg(f) < 1)
      throw std::domain_error("etale factor must have degree >= 1");
    if (!qq.eq(f.back(), Rational(1)))
      throw std::domain_error("etale factor must be monic: " +
                              unipoly_to_string(f));
    if (!squarefree_check(f))
      throw std::domain_error("etale factor must be squarefree: " +
                              unipoly_to_string(f));
    rank_ += poly_deg(f);
  }
  for (int i = 0; i < factor_count(); ++i) {
    for (const auto& root : isolate_real_roots(factors_[static_cast<std::size_t>(i)]))
      orderings_.push_back({i, root});
  }
}

EtaleAlgebra EtaleAlgebra::rationals() {
  return EtaleAlgebra({unipoly_from_ints({0, 1})});
}

bool EtaleAlgebra::operator==(const EtaleAlgebra& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!poly_eq(qq, factors_[i], o.factors_[i])) return false;
  return true;
}

EtaleAlgebra::Elem EtaleAlgebra::zero() const {
  return Elem{std::vector<UniPoly>(factors_.size())};
}

EtaleAlgebra::Elem EtaleAlgebra::one() const { return from_rational(Rational(1)); }

EtaleAlgebra::Elem EtaleAlgebra::from_int(long long n) const {
  return from_rational(Rational(n));
}

EtaleAlgebra::Elem EtaleAlgebra::from_rational(const Rational& r) const {
  Elem e = zero();
  if (!r.is_zero())
    for (auto& p : e.parts) p = {r};
  return e;
}

EtaleAlgebra::Elem EtaleAlgebra::embed_poly(const UniPoly& p) const {
  Elem e = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i)
    e.parts[i] = poly_mod(qq, p, factors_[i]);
  return e;
}

EtaleAlgebra::Elem EtaleAlgebra::from_parts(std::vector<UniPoly> parts) const {
  if (static_cast<int>(parts.size()) != factor_count())
    throw std::domain_error("element part count does not match factor count");
  for (std::size_t i = 0; i < parts.size(); ++i)
    parts[i] = poly_mod(qq, parts[i], factors_[i]);
  return Elem{std::move(parts)};
}

bool EtaleAlgebra::is_zero(const Elem& a) const {
  for (const auto& p : a.parts)
    if (!p.empty()) return false;
  return true;
}

EtaleAlgebra::Elem EtaleAlgebra::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (std::size_t i = 0; i < r.parts.size(); ++i)
    r.parts[i] = poly_add(qq, r.parts[i], b.parts[i]);
  return r;
}

EtaleAlgebra::Elem EtaleAlgebra::sub(const Elem& a, const Elem& b) const {
  return add(a, neg(b));
}

EtaleAlgebra::Elem EtaleAlgebra::neg(const Elem& a) const {
  Elem r = a;
  for (auto& p : r.parts) p = poly_neg(qq, p);
  return r;
}

EtaleAlgebra::Elem EtaleAlgebra::mul(const Elem& a, const Elem& b) const {
  Elem r = zero();
  for (std::size_t i = 0; i < r.parts.size(); ++i)
    r.parts[i] = poly_mod(qq, poly_mul(qq, a.parts[i], b.parts[i]), factors_[i]);
  return r;
}

bool EtaleAlgebra::is_unit(const Elem& a) const {
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (a.parts[i].empty()) return false;
    if (poly_deg(poly_gcd(qq, a.parts[i], factors_[i])) != 0) return false;
  }
  return true;
}

EtaleAlgebra::Elem EtaleAlgebra::inv(const Elem& a) const {
  Elem r = zero();
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    NumberField k = factor_field(static_cast<int>(i));
    if (a.parts[i].empty())
      throw NotAUnitError("not a unit: zero in factor " + std::to_string(i));
    r.parts[i] = k.inv(a.parts[i]);
  }
  return r;
}

Rational EtaleAlgebra::trace(const Elem& a) const {
  Rational total(0);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const UniPoly& f = factors_[i];
    const int d = poly_deg(f);
    // Trace of multiplication by a.parts[i] on the power basis.
    UniPoly col = a.parts[i];  // a * x^0 mod f
    for (int j = 0; j < d; ++j) {
      if (j > 0) {
        // col <- col * x mod f
        col.insert(col.begin(), Rational(0));
        col = poly_mod(qq, col, f);
      }
      if (static_cast<int>(col.size()) > j) total += col[static_cast<std::size_t>(j)];
    }
  }
  return total;
}

bool EtaleAlgebra::same_ordering(const Ordering& a, const Ordering& b) const {
  if (a.factor_index != b.factor_index) return false;
  return roots_equal(qq, a.root, b.root);
}

int EtaleAlgebra::ordering_index(const Ordering& o) const {
  for (std::size_t i = 0; i < orderings_.size(); ++i)
    if (same_ordering(orderings_[i], o)) return static_cast<int>(i);
  throw std::domain_error("ordering does not belong to this algebra");
}

int EtaleAlgebra::sign_at(const Elem& a, const Ordering& o) const {
  return ::formsig::sign_at(a.parts[static_cast<std::size_t>(o.factor_index)],
                            o.root);
}

std::string EtaleAlgebra::str(const Elem& a) const {
  if (factors_.size() == 1) return unipoly_to_string(a.parts[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (i) s += ", ";
    s += unipoly_to_string(a.parts[i]);
  }
  return s + ")";
}

EtaleAlgebra etale_product(const EtaleAlgebra& a, const EtaleAlgebra& b) {
  std::vector<UniPoly> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return EtaleAlgebra(std::move(factors));
}

EtaleElement elem_concat(const EtaleElement& a, const EtaleElement& b) {
  EtaleElement r = a;
  r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
  return r;
}

}  // namespace formsig
