#include "formsig/poly.hpp"
#include "formsig/roots.hpp"

#include <sstream>
#include <stdexcept>

namespace formsig {

Rational rational_from_string(const std::string& s) {
  auto bad = [&]() {
    return std::invalid_argument("malformed rational: '" + s + "'");
  };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << '/' << rat_den(r);
  return os.str();
}

std::string unipoly_to_string(const UniPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = poly_deg(p); i >= 0; --i) {
    const Rational& c = p[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational a = first ? c : abs_of(c);
    first = false;
    if (i == 0) {
      os << rational_to_string(a);
    } else {
      if (a != 1) os << rational_to_string(a) << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool squarefree_check(const UniPoly& p) {
  RationalField qq;
  return poly_is_squarefree(qq, p);
}

SturmChain sturm_chain(const UniPoly& p) {
  RationalField qq;
  return sturm_chain_of(qq, p);
}

long count_real_roots(const UniPoly& p, const Bound& lo, const Bound& hi) {
  RationalField qq;
  return count_real_roots_of(qq, p, lo, hi);
}

std::vector<RealAlgebraic> isolate_real_roots(const UniPoly& p) {
  RationalField qq;
  return isolate_real_roots_of(qq, p);
}

RealAlgebraic refine(const RealAlgebraic& r, const Rational& width) {
  RationalField qq;
  return refine_root(qq, r, width);
}

int sign_at(const UniPoly& g, const RealAlgebraic& r) {
  RationalField qq;
  return sign_at_root(qq, g, r);
}

}  // namespace formsig
