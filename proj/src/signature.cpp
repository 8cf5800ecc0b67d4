#include "formsig/signature.hpp"

#include <algorithm>
#include <sstream>

namespace formsig {

namespace {

int sgn(int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Deterministic pool of symmetric unit candidates for diagonal entries.
std::vector<AlgElemT<EtaleAlgebra>> symmetric_unit_pool(
    const InvolutiveAlgebra& A, const SearchBudget& budget) {
  std::vector<AlgElemT<EtaleAlgebra>> pool;
  const EtaleAlgebra& K = A.base();
  auto push_scalar = [&](const EtaleElement& c) {
    if (K.is_unit(c)) pool.push_back(A.scalar(c));
  };
  for (int v = 1; v <= budget.height; ++v) {
    push_scalar(K.from_int(v));
    push_scalar(K.from_int(-v));
  }
  // Base generators and small shifted combinations.
  EtaleElement x = K.generator();
  for (int shift = 0; shift <= 2; ++shift) {
    EtaleElement c = K.add(x, K.from_int(shift));
    push_scalar(c);
    push_scalar(K.neg(c));
    c = K.sub(x, K.from_int(shift + 1));
    push_scalar(c);
    push_scalar(K.neg(c));
  }
  // The twist itself when it is symmetric, and small multiples.
  if (A.twist_sign() == 1) {
    AlgElemT<EtaleAlgebra> u = A.twist();
    pool.push_back(u);
    pool.push_back(A.neg(u));
    pool.push_back(A.mul_base(K.from_int(2), u));
  }
  return pool;
}

HermForm one_entry_form(const InvolutiveAlgebra& A,
                        const AlgElemT<EtaleAlgebra>& s) {
  return diagonal_form(A, std::vector<AlgElemT<EtaleAlgebra>>{s});
}

// <1,1>-padding: doubles the total signature j times.
HermForm pad_doubling(const EtaleAlgebra& K, HermForm h, int times) {
  for (int i = 0; i < times; ++i) {
    QuadForm two = qf_diagonal(K, {K.one(), K.one()});
    h = q_tensor_h(two, h);
  }
  return h;
}

}  // namespace

ReferenceForm ReferenceForm::wrap(HermForm f) {
  ReferenceForm r{std::move(f), {}};
  const auto& A = r.form.algebra;
  const auto& ords = A.base().orderings();
  for (std::size_t i = 0; i < ords.size(); ++i) {
    int s = m_signature(r.form, ords[i]);
    if (s == 0 && !A.is_nil_at(ords[i]))
      throw std::domain_error(
          "reference form has zero signature at a non-nil ordering");
    r.m_signs.push_back(s);
  }
  return r;
}

std::vector<EtaleElement> ordering_localizer(const EtaleAlgebra& K,
                                             int target_index) {
  const auto& ords = K.orderings();
  if (target_index < 0 || target_index >= static_cast<int>(ords.size()))
    throw std::domain_error("localizer target out of range");
  const Ordering& target = ords[static_cast<std::size_t>(target_index)];
  const RationalField qq;

  // Neighbours within the same factor, exploiting the ascending sort.
  const RealAlgebraic* left = nullptr;
  const RealAlgebraic* right = nullptr;
  bool other_factor_orderings = false;
  for (std::size_t i = 0; i < ords.size(); ++i) {
    if (static_cast<int>(i) == target_index) continue;
    if (ords[i].factor_index != target.factor_index) {
      other_factor_orderings = true;
      continue;
    }
    if (static_cast<int>(i) < target_index) left = &ords[i].root;
    if (static_cast<int>(i) > target_index && right == nullptr)
      right = &ords[i].root;
  }

  auto separator = [&](const Rational& q, bool x_minus_q) {
    // Element with part x - q (or q - x) in the target factor and -1
    // elsewhere; a unit because q is strictly between adjacent real roots.
    std::vector<UniPoly> parts;
    for (int f = 0; f < K.factor_count(); ++f) {
      if (f == target.factor_index) {
        UniPoly p{-q, Rational(1)};
        if (!x_minus_q) p = poly_neg(qq, p);
        parts.push_back(p);
      } else {
        parts.push_back(UniPoly{Rational(-1)});
      }
    }
    return K.from_parts(std::move(parts));
  };

  std::vector<EtaleElement> out;
  if (left) out.push_back(separator((left->hi + target.root.lo) / 2, true));
  if (right) out.push_back(separator((target.root.hi + right->lo) / 2, false));
  if (out.empty() && other_factor_orderings) {
    std::vector<UniPoly> parts;
    for (int f = 0; f < K.factor_count(); ++f)
      parts.push_back(UniPoly{Rational(f == target.factor_index ? 1 : -1)});
    out.push_back(K.from_parts(std::move(parts)));
  }
  for (const auto& b : out)
    if (!K.is_unit(b))
      throw std::logic_error("localizer produced a non-unit separator");
  return out;
}

ReferenceForm find_reference_form(const InvolutiveAlgebra& A,
                                  const SearchBudget& budget) {
  const EtaleAlgebra& K = A.base();
  const auto& ords = K.orderings();
  std::vector<int> non_nil;
  for (std::size_t i = 0; i < ords.size(); ++i)
    if (!A.is_nil_at(ords[i])) non_nil.push_back(static_cast<int>(i));

  if (non_nil.empty()) return ReferenceForm::wrap(one_entry_form(A, A.identity()));

  auto pool = symmetric_unit_pool(A, budget);

  // Single diagonal entry covering every non-nil ordering.
  for (const auto& s : pool) {
    if (!A.is_symmetric(s)) continue;
    HermForm cand = one_entry_form(A, s);
    if (!nonsingular(cand)) continue;
    bool all = true;
    for (int i : non_nil)
      if (m_signature(cand, ords[static_cast<std::size_t>(i)]) == 0) {
        all = false;
        break;
      }
    if (all) return ReferenceForm::wrap(std::move(cand));
  }

  // Per-ordering pieces glued with Pfister localizers.
  std::optional<HermForm> glued;
  for (int i : non_nil) {
    const Ordering& alpha = ords[static_cast<std::size_t>(i)];
    const AlgElemT<EtaleAlgebra>* found = nullptr;
    for (const auto& s : pool) {
      if (!A.is_symmetric(s)) continue;
      HermForm cand = one_entry_form(A, s);
      if (!nonsingular(cand)) continue;
      if (m_signature(cand, alpha) != 0) {
        found = &s;
        break;
      }
    }
    if (!found)
      throw SearchError(
          "reference form search exhausted: no symmetric unit has nonzero "
          "signature at ordering " +
          std::to_string(i) + " within height " + std::to_string(budget.height));
    std::vector<EtaleElement> loc = ordering_localizer(K, i);
    if (static_cast<int>(loc.size()) > budget.pfister_len)
      throw SearchError("reference form search exceeded the Pfister budget");
    HermForm piece = q_tensor_h(pfister(K, loc), one_entry_form(A, *found));
    glued = glued ? orth_sum(*glued, piece) : piece;
  }
  return ReferenceForm::wrap(std::move(*glued));
}

int eta_signature(const HermForm& h, const Ordering& ord,
                  const ReferenceForm& eta) {
  if (!(h.algebra == eta.form.algebra))
    throw std::domain_error("reference form lives over a different algebra");
  const auto& A = h.algebra;
  if (A.is_nil_at(ord)) return 0;
  int idx = A.base().ordering_index(ord);
  int ref = eta.m_signs[static_cast<std::size_t>(idx)];
  return sgn(ref) * m_signature(h, ord);
}

int eta_signature_rel(const RelHermForm& h, const RelOrdering& ord,
                      const RelHermForm& eta_extended) {
  const auto& A = h.algebra;
  if (A.is_nil_at(ord)) return 0;
  int ref = m_signature(eta_extended, ord);
  if (ref == 0)
    throw std::domain_error(
        "extended reference form vanishes at a non-nil ordering");
  return sgn(ref) * m_signature(h, ord);
}

TotalSignature total_signature(const HermForm& h, const ReferenceForm& eta) {
  TotalSignature t;
  for (const auto& ord : h.algebra.base().orderings())
    t.values.push_back(eta_signature(h, ord, eta));
  return t;
}

TwoPowerForm find_two_power_form(const InvolutiveAlgebra& A,
                                 const ReferenceForm& eta,
                                 const SearchBudget& budget) {
  const EtaleAlgebra& K = A.base();
  const auto& ords = K.orderings();
  std::vector<int> non_nil;
  for (std::size_t i = 0; i < ords.size(); ++i)
    if (!A.is_nil_at(ords[i])) non_nil.push_back(static_cast<int>(i));
  if (non_nil.empty()) return {one_entry_form(A, A.identity()), 0};

  auto pool = symmetric_unit_pool(A, budget);

  // Per-ordering pieces with 2-power local signature.
  struct Piece {
    HermForm form;
    int log2_abs;
  };
  std::vector<Piece> pieces;
  for (int i : non_nil) {
    const Ordering& alpha = ords[static_cast<std::size_t>(i)];
    std::optional<Piece> best;
    for (const auto& s : pool) {
      if (!A.is_symmetric(s)) continue;
      HermForm cand = one_entry_form(A, s);
      if (!nonsingular(cand)) continue;
      int sig = std::abs(m_signature(cand, alpha));
      if (sig == 0) continue;
      if ((sig & (sig - 1)) != 0) continue;  // not a 2-power
      int lg = 0;
      while ((1 << lg) < sig) ++lg;
      if (!best || lg < best->log2_abs) best = Piece{cand, lg};
      if (lg == 0) break;
    }
    if (!best)
      throw SearchError(
          "two-power search exhausted: no symmetric unit has 2-power "
          "signature at ordering " +
          std::to_string(i));
    std::vector<EtaleElement> loc = ordering_localizer(K, i);
    int k = static_cast<int>(loc.size());
    if (k > budget.pfister_len)
      throw SearchError("two-power search exceeded the Pfister budget");
    best->form = q_tensor_h(pfister(K, loc), best->form);
    best->log2_abs += k;
    pieces.push_back(std::move(*best));
  }

  int m = 0;
  for (const auto& p : pieces) m = std::max(m, p.log2_abs);
  std::optional<HermForm> h0;
  for (auto& p : pieces) {
    HermForm padded = pad_doubling(K, p.form, m - p.log2_abs);
    h0 = h0 ? orth_sum(*h0, padded) : padded;
  }

  // Independent verification against the total-signature evaluation.
  TotalSignature total = total_signature(*h0, eta);
  for (std::size_t i = 0; i < ords.size(); ++i) {
    bool nil = A.is_nil_at(ords[i]);
    int expect = nil ? 0 : (1 << m);
    if (std::abs(total.values[i]) != expect)
      throw SearchError("two-power candidate failed verification at ordering " +
                        std::to_string(i));
  }
  if (!nonsingular(*h0))
    throw SearchError("two-power candidate is singular");
  return {std::move(*h0), m};
}

namespace {

// Bounded direct search: a nonnegative-or-negated combination of at most
// two pool singles whose totals hit the target exactly. Finds the small
// realizations (and in particular exponent 0) that the localizer
// construction would miss.
std::optional<HermForm> combination_hit(
    const std::vector<std::pair<HermForm, std::vector<int>>>& singles,
    const std::vector<int>& target) {
  const int kMaxCopies = 8;
  auto scaled_matches = [&](const std::vector<int>& t, int n1,
                            const std::vector<int>& u, int n2) {
    for (std::size_t i = 0; i < target.size(); ++i)
      if (n1 * t[i] + n2 * u[i] != target[i]) return false;
    return true;
  };
  auto build = [&](const HermForm& h, int copies) -> HermForm {
    HermForm base = copies > 0 ? h : herm_neg(h);
    return herm_repeat(base, std::abs(copies));
  };
  const std::vector<int> zero(target.size(), 0);
  for (std::size_t a = 0; a < singles.size(); ++a) {
    for (int n1 = -kMaxCopies; n1 <= kMaxCopies; ++n1) {
      if (n1 == 0) continue;
      if (scaled_matches(singles[a].second, n1, zero, 0))
        return build(singles[a].first, n1);
      for (std::size_t b = a + 1; b < singles.size(); ++b)
        for (int n2 = 1; n2 <= kMaxCopies; ++n2) {
          if (scaled_matches(singles[a].second, n1, singles[b].second, n2))
            return orth_sum(build(singles[a].first, n1),
                            build(singles[b].first, n2));
          if (scaled_matches(singles[a].second, n1, singles[b].second, -n2))
            return orth_sum(build(singles[a].first, n1),
                            build(singles[b].first, -n2));
        }
    }
  }
  return std::nullopt;
}

}  // namespace

TwoPowerMatch two_power_multiple_match(const TotalSignature& f,
                                       const InvolutiveAlgebra& A,
                                       const ReferenceForm& eta,
                                       const SearchBudget& budget) {
  const EtaleAlgebra& K = A.base();
  const auto& ords = K.orderings();
  if (f.values.size() != ords.size())
    throw std::domain_error("total signature length does not match Sper");
  for (std::size_t i = 0; i < ords.size(); ++i)
    if (A.is_nil_at(ords[i]) && f.values[i] != 0)
      throw std::domain_error("target total does not vanish on the nil set");

  bool f_is_zero = true;
  for (int v : f.values)
    if (v != 0) f_is_zero = false;
  if (f_is_zero) {
    TwoPowerMatch ok;
    ok.found = true;
    ok.exponent = 0;
    ok.form = hyperbolic_herm(1, A, 1);
    return ok;
  }

  // Direct realization first, smallest exponent wins.
  {
    std::vector<std::pair<HermForm, std::vector<int>>> singles;
    for (const auto& s : symmetric_unit_pool(A, budget)) {
      if (!A.is_symmetric(s)) continue;
      HermForm cand = one_entry_form(A, s);
      if (!nonsingular(cand)) continue;
      singles.emplace_back(cand, total_signature(cand, eta).values);
    }
    for (int m = 0; m <= budget.max_m; ++m) {
      std::vector<int> target;
      for (int v : f.values) target.push_back(v * (1 << m));
      if (auto h = combination_hit(singles, target)) {
        if (total_signature(*h, eta).values == target && nonsingular(*h)) {
          TwoPowerMatch ok;
          ok.found = true;
          ok.exponent = m;
          ok.form = std::move(*h);
          return ok;
        }
      }
    }
  }

  struct Piece {
    HermForm form;  // signature +2^log2 at its ordering, 0 elsewhere
    int log2;
    std::size_t ord_index;
  };
  std::vector<Piece> pieces;
  TwoPowerMatch fail;
  auto pool = symmetric_unit_pool(A, budget);
  for (std::size_t i = 0; i < ords.size(); ++i) {
    if (f.values[i] == 0) continue;
    const Ordering& alpha = ords[i];
    std::optional<Piece> got;
    for (const auto& s : pool) {
      if (!A.is_symmetric(s)) continue;
      HermForm cand = one_entry_form(A, s);
      if (!nonsingular(cand)) continue;
      int sig = eta_signature(cand, alpha, eta);
      int a = std::abs(sig);
      if (a == 0 || (a & (a - 1)) != 0) continue;
      int lg = 0;
      while ((1 << lg) < a) ++lg;
      HermForm oriented = sig > 0 ? cand : herm_neg(cand);
      std::vector<EtaleElement> loc = ordering_localizer(K, static_cast<int>(i));
      got = Piece{q_tensor_h(pfister(K, loc), oriented),
                  lg + static_cast<int>(loc.size()), i};
      break;
    }
    if (!got) {
      fail.failure = "no indicator form at ordering " + std::to_string(i);
      return fail;
    }
    pieces.push_back(std::move(*got));
  }

  int m = 0;
  for (const auto& p : pieces) m = std::max(m, p.log2);
  if (m > budget.max_m) {
    fail.failure = "required exponent exceeds the budget";
    return fail;
  }

  std::optional<HermForm> h;
  for (const auto& p : pieces) {
    int copies = std::abs(f.values[p.ord_index]) << (m - p.log2);
    HermForm oriented = f.values[p.ord_index] > 0 ? p.form : herm_neg(p.form);
    for (int c = 0; c < copies; ++c) h = h ? orth_sum(*h, oriented) : oriented;
  }
  if (!h) h = hyperbolic_herm(1, A, 1);

  TotalSignature total = total_signature(*h, eta);
  for (std::size_t i = 0; i < ords.size(); ++i)
    if (total.values[i] != f.values[i] * (1 << m)) {
      fail.failure = "verification mismatch at ordering " + std::to_string(i);
      return fail;
    }
  TwoPowerMatch ok;
  ok.found = true;
  ok.exponent = m;
  ok.form = std::move(*h);
  return ok;
}

}  // namespace formsig
