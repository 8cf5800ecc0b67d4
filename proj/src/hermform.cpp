#include "formsig/hermform.hpp"

#include <stdexcept>

namespace formsig {

namespace {

EtaleElement concat_parts(const std::vector<const EtaleElement*>& parts) {
  EtaleElement out;
  for (const auto* p : parts)
    out.parts.insert(out.parts.end(), p->parts.begin(), p->parts.end());
  return out;
}

}  // namespace

HermForm direct_product(const std::vector<HermForm>& components) {
  if (components.empty())
    throw std::domain_error("direct product needs at least one component");
  const HermForm& first = components.front();
  const int n = first.algebra.n();
  const int m = first.dim();
  const DivisionKind kind = first.algebra.kind();
  for (const auto& h : components) {
    if (h.algebra.n() != n || h.algebra.kind() != kind ||
        h.epsilon != first.epsilon || h.dim() != m ||
        h.algebra.standard() != first.algebra.standard())
      throw std::domain_error("direct product components must share shape");
  }

  // Product base: concatenate the factor lists.
  std::vector<UniPoly> factors;
  for (const auto& h : components)
    for (const auto& f : h.algebra.base().factors()) factors.push_back(f);
  EtaleAlgebra base(std::move(factors));

  auto concat_elem = [&](auto pick) {
    std::vector<const EtaleElement*> ps;
    for (const auto& h : components) ps.push_back(pick(h));
    return concat_parts(ps);
  };

  EtaleElement d = concat_elem([](const HermForm& h) { return &h.algebra.quad_d(); });
  EtaleElement qa = concat_elem([](const HermForm& h) { return &h.algebra.quat_a(); });
  EtaleElement qb = concat_elem([](const HermForm& h) { return &h.algebra.quat_b(); });

  const int dd = first.algebra.d_dim();
  auto concat_delem = [&](int i, int j, auto pick) {
    DElemT<EtaleAlgebra> out;
    for (int c = 0; c < dd; ++c) {
      std::vector<const EtaleElement*> ps;
      for (const auto& h : components)
        ps.push_back(&pick(h).at(i, j).c[static_cast<std::size_t>(c)]);
      out.c.push_back(concat_parts(ps));
    }
    return out;
  };

  Mat<DElemT<EtaleAlgebra>> twist(n, n, DElemT<EtaleAlgebra>{});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      twist.at(i, j) = concat_delem(
          i, j, [](const HermForm& h) -> const Mat<DElemT<EtaleAlgebra>>& {
            return h.algebra.twist();
          });

  InvolutiveAlgebra algebra(base, n, kind, d, qa, qb, first.algebra.standard(),
                            twist);

  Mat<AlgElemT<EtaleAlgebra>> gram(m, m, algebra.zero_elem());
  for (int gi = 0; gi < m; ++gi)
    for (int gj = 0; gj < m; ++gj) {
      AlgElemT<EtaleAlgebra> entry(n, n, algebra.dzero());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          entry.at(i, j) = concat_delem(
              i, j,
              [&](const HermForm& h) -> const Mat<DElemT<EtaleAlgebra>>& {
                return h.gram.at(gi, gj);
              });
      gram.at(gi, gj) = std::move(entry);
    }

  return herm_from_gram(std::move(algebra), first.epsilon, std::move(gram));
}

}  // namespace formsig
