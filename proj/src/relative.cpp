#include "formsig/relative.hpp"

#include <stdexcept>

namespace formsig {

namespace {
const RationalField qq;

// Strips leading (highest-degree) zero coefficients of a y-polynomial over
// the base.
std::vector<EtaleElement> ynormalize(const EtaleAlgebra& base,
                                     std::vector<EtaleElement> c) {
  while (!c.empty() && base.is_zero(c.back())) c.pop_back();
  return c;
}

}  // namespace

RelativeEtale::RelativeEtale(EtaleAlgebra base, std::vector<EtaleElement> f)
    : base_(std::move(base)), f_(std::move(f)) {
  if (f_.size() < 2)
    throw std::domain_error("extension polynomial must have degree >= 1");
  if (!(f_.back() == base_.one()))
    throw std::domain_error("extension polynomial must be monic");
  for (const auto& c : f_)
    if (static_cast<int>(c.parts.size()) != base_.factor_count())
      throw std::domain_error("extension coefficient lives over a different base");
  // Separability per base factor: gcd(f_i, f_i') must be constant. This is
  // embedding-independent and implies the image of f is squarefree at every
  // ordering of the base.
  for (int i = 0; i < base_.factor_count(); ++i) {
    NumberField k = base_.factor_field(i);
    PolyOf<NumberField> fi = project_poly(f_, i);
    if (poly_deg(fi) != rel_degree())
      throw std::domain_error("extension polynomial degenerates in a base factor");
    if (poly_deg(poly_gcd(k, fi, poly_derivative(k, fi))) != 0)
      throw std::domain_error("extension polynomial is not separable in factor " +
                              std::to_string(i));
  }
}

PolyOf<NumberField> RelativeEtale::project_poly(
    const std::vector<EtaleElement>& c, int i) const {
  NumberField k = base_.factor_field(i);
  PolyOf<NumberField> p;
  p.reserve(c.size());
  for (const auto& e : c) p.push_back(e.parts[static_cast<std::size_t>(i)]);
  return poly_normalize(k, std::move(p));
}

PolyOf<NumberField> RelativeEtale::project(const Elem& a, int i) const {
  return project_poly(a.coeffs, i);
}

std::vector<EtaleElement> RelativeEtale::reduce(
    std::vector<EtaleElement> c) const {
  c = ynormalize(base_, std::move(c));
  const int t = rel_degree();
  // Division by the monic f in y, keeping the remainder.
  while (static_cast<int>(c.size()) - 1 >= t) {
    const int shift = static_cast<int>(c.size()) - 1 - t;
    EtaleElement lead = c.back();
    for (int j = 0; j <= t; ++j) {
      auto& slot = c[static_cast<std::size_t>(shift + j)];
      slot = base_.sub(slot, base_.mul(lead, f_[static_cast<std::size_t>(j)]));
    }
    c = ynormalize(base_, std::move(c));
  }
  return c;
}

RelativeEtale::Elem RelativeEtale::zero() const { return Elem{{}}; }

RelativeEtale::Elem RelativeEtale::one() const {
  return Elem{{base_.one()}};
}

RelativeEtale::Elem RelativeEtale::from_int(long long n) const {
  return embed(base_.from_int(n));
}

RelativeEtale::Elem RelativeEtale::from_rational(const Rational& r) const {
  return embed(base_.from_rational(r));
}

RelativeEtale::Elem RelativeEtale::embed(const EtaleElement& e) const {
  if (base_.is_zero(e)) return zero();
  return Elem{{e}};
}

RelativeEtale::Elem RelativeEtale::generator() const {
  std::vector<EtaleElement> c{base_.zero(), base_.one()};
  return from_coeffs(std::move(c));
}

RelativeEtale::Elem RelativeEtale::from_coeffs(
    std::vector<EtaleElement> coeffs) const {
  for (const auto& c : coeffs)
    if (static_cast<int>(c.parts.size()) != base_.factor_count())
      throw std::domain_error("coefficient lives over a different base");
  return Elem{reduce(std::move(coeffs))};
}

bool RelativeEtale::is_zero(const Elem& a) const { return a.coeffs.empty(); }

RelativeEtale::Elem RelativeEtale::add(const Elem& a, const Elem& b) const {
  std::vector<EtaleElement> c(std::max(a.coeffs.size(), b.coeffs.size()),
                              base_.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i)
    c[i] = base_.add(c[i], b.coeffs[i]);
  return Elem{ynormalize(base_, std::move(c))};
}

RelativeEtale::Elem RelativeEtale::sub(const Elem& a, const Elem& b) const {
  return add(a, neg(b));
}

RelativeEtale::Elem RelativeEtale::neg(const Elem& a) const {
  Elem r = a;
  for (auto& c : r.coeffs) c = base_.neg(c);
  return r;
}

RelativeEtale::Elem RelativeEtale::mul(const Elem& a, const Elem& b) const {
  if (a.coeffs.empty() || b.coeffs.empty()) return zero();
  std::vector<EtaleElement> c(a.coeffs.size() + b.coeffs.size() - 1,
                              base_.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] = base_.add(c[i + j], base_.mul(a.coeffs[i], b.coeffs[j]));
  return Elem{reduce(std::move(c))};
}

bool RelativeEtale::is_unit(const Elem& a) const {
  for (int i = 0; i < base_.factor_count(); ++i) {
    NumberField k = base_.factor_field(i);
    PolyOf<NumberField> ai = project(a, i);
    if (ai.empty()) return false;
    if (poly_deg(poly_gcd(k, ai, project_poly(f_, i))) != 0) return false;
  }
  return true;
}

RelativeEtale::Elem RelativeEtale::inv(const Elem& a) const {
  const int t = rel_degree();
  std::vector<EtaleElement> out(static_cast<std::size_t>(t), base_.zero());
  for (int i = 0; i < base_.factor_count(); ++i) {
    NumberField k = base_.factor_field(i);
    PolyOf<NumberField> fi = project_poly(f_, i);
    PolyOf<NumberField> ai = project(a, i);
    if (ai.empty())
      throw NotAUnitError("not a unit: zero in base factor " + std::to_string(i));
    // Extended Euclid for ai mod fi over the factor field.
    PolyOf<NumberField> r0 = fi, r1 = ai;
    PolyOf<NumberField> t0 = {}, t1 = {k.one()};
    while (!r1.empty()) {
      auto [q, r] = poly_divmod(k, r0, r1);
      PolyOf<NumberField> t2 = poly_sub(k, t0, poly_mul(k, q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (poly_deg(r0) != 0)
      throw NotAUnitError("not a unit: zero divisor in base factor " +
                          std::to_string(i));
    PolyOf<NumberField> invi =
        poly_mod(k, poly_scale(k, t0, k.inv(r0[0])), fi);
    for (std::size_t j = 0; j < invi.size(); ++j)
      out[j].parts[static_cast<std::size_t>(i)] = invi[j];
  }
  return Elem{ynormalize(base_, std::move(out))};
}

EtaleElement RelativeEtale::trace_down(const Elem& a) const {
  const int t = rel_degree();
  EtaleElement total = base_.zero();
  Elem col = a;  // a * y^0
  const Elem y = generator();
  for (int j = 0; j < t; ++j) {
    if (j > 0) col = mul(col, y);
    if (static_cast<int>(col.coeffs.size()) > j)
      total = base_.add(total, col.coeffs[static_cast<std::size_t>(j)]);
  }
  return total;
}

std::vector<RelOrdering> RelativeEtale::extensions_of(
    const Ordering& alpha) const {
  OrderedNumberField ok = base_.ordered_field(alpha);
  PolyOf<OrderedNumberField> fi = project_poly(f_, alpha.factor_index);
  std::vector<RelOrdering> out;
  for (auto& root : isolate_real_roots_of(ok, fi))
    out.push_back({alpha, std::move(root)});
  return out;
}

std::vector<RelOrdering> RelativeEtale::orderings() const {
  std::vector<RelOrdering> out;
  for (const auto& alpha : base_.orderings())
    for (auto& g : extensions_of(alpha)) out.push_back(std::move(g));
  return out;
}

int RelativeEtale::sign_at(const Elem& a, const RelOrdering& o) const {
  OrderedNumberField ok = base_.ordered_field(o.base);
  PolyOf<OrderedNumberField> ai = project(a, o.base.factor_index);
  if (ai.empty()) return 0;
  return sign_at_root(ok, ai, o.root);
}

bool RelativeEtale::pullback_check(const RelOrdering& gamma,
                                   const Ordering& alpha) const {
  // The restriction of gamma to the base is gamma.base: positivity of a
  // base element b at gamma is positivity of b at gamma.base, because b
  // embeds as a y-constant. So gamma extends alpha iff the two base
  // orderings coincide.
  return base_.same_ordering(gamma.base, alpha);
}

std::string RelativeEtale::str(const Elem& a) const {
  if (a.coeffs.empty()) return "0";
  std::string s;
  for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
    if (j) s += " + ";
    s += "(" + base_.str(a.coeffs[j]) + ")";
    if (j == 1) s += "*y";
    if (j > 1) s += "*y^" + std::to_string(j);
  }
  return s;
}

}  // namespace formsig

