#include "formsig/quadform.hpp"

#include "formsig/nflinalg.hpp"

#include <stdexcept>

namespace formsig {

namespace {

// Gram matrix of one factor, as a matrix over the factor's number field.
Mat<UniPoly> factor_gram(const QuadForm& q, int factor) {
  Mat<UniPoly> m(q.dim(), q.dim(), {});
  for (int i = 0; i < q.dim(); ++i)
    for (int j = 0; j < q.dim(); ++j)
      m.at(i, j) = q.gram.at(i, j).parts[static_cast<std::size_t>(factor)];
  return m;
}

// Symmetric Gaussian elimination over a field, tracking the basis change.
// Pivot rule: first nonzero diagonal entry, else the smallest off-diagonal
// (i, j) repaired with e_i <- e_i + e_j.
void diagonalize_over_field(const NumberField& k, Mat<UniPoly>& m,
                            Mat<UniPoly>& p) {
  const int n = m.rows;
  auto col_axpy = [&](Mat<UniPoly>& mat, int dst, int src, const UniPoly& c) {
    for (int r = 0; r < mat.rows; ++r)
      mat.at(r, dst) = k.add(mat.at(r, dst), k.mul(c, mat.at(r, src)));
  };
  auto row_axpy = [&](Mat<UniPoly>& mat, int dst, int src, const UniPoly& c) {
    for (int t = 0; t < mat.cols; ++t)
      mat.at(dst, t) = k.add(mat.at(dst, t), k.mul(c, mat.at(src, t)));
  };
  auto swap_basis = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < n; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int i = 0; i < n; ++i) std::swap(p.at(i, a), p.at(i, b));
  };

  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (!k.is_zero(m.at(i, i))) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      int pi = -1, pj = -1;
      for (int i = c; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!k.is_zero(m.at(i, j))) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;  // all-zero block
      col_axpy(m, pi, pj, k.one());
      row_axpy(m, pi, pj, k.one());
      col_axpy(p, pi, pj, k.one());
      pivot = pi;
    }
    swap_basis(c, pivot);
    const UniPoly piv_inv = k.inv(m.at(c, c));
    for (int j = c + 1; j < n; ++j) {
      if (k.is_zero(m.at(c, j))) continue;
      const UniPoly f = k.neg(k.mul(m.at(c, j), piv_inv));
      col_axpy(m, j, c, f);
      row_axpy(m, j, c, f);
      col_axpy(p, j, c, f);
    }
  }
}

}  // namespace

Diagonalization diagonalize(const QuadForm& q) {
  const int n = q.dim();
  const int nf = q.base.factor_count();
  Mat<EtaleElement> d(n, n, q.base.zero());
  Mat<EtaleElement> w(n, n, q.base.zero());
  for (int f = 0; f < nf; ++f) {
    NumberField k = q.base.factor_field(f);
    Mat<UniPoly> m = factor_gram(q, f);
    Mat<UniPoly> p(n, n, {});
    for (int i = 0; i < n; ++i) p.at(i, i) = k.one();
    diagonalize_over_field(k, m, p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        d.at(i, j).parts[static_cast<std::size_t>(f)] = m.at(i, j);
        w.at(i, j).parts[static_cast<std::size_t>(f)] = p.at(i, j);
      }
  }
  return {QuadForm{q.base, std::move(d)}, std::move(w)};
}

QuadForm trace_form(const EtaleAlgebra& T) {
  EtaleAlgebra rat = EtaleAlgebra::rationals();
  // Concatenated power basis across factors.
  std::vector<EtaleElement> basis;
  for (int f = 0; f < T.factor_count(); ++f) {
    const int d = poly_deg(T.factors()[static_cast<std::size_t>(f)]);
    for (int j = 0; j < d; ++j) {
      EtaleElement b = T.zero();
      UniPoly xj(static_cast<std::size_t>(j) + 1, Rational(0));
      xj[static_cast<std::size_t>(j)] = Rational(1);
      b.parts[static_cast<std::size_t>(f)] = xj;
      basis.push_back(std::move(b));
    }
  }
  const int n = static_cast<int>(basis.size());
  Mat<EtaleElement> g(n, n, rat.zero());
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      Rational t = T.trace(T.mul(basis[static_cast<std::size_t>(u)],
                                 basis[static_cast<std::size_t>(v)]));
      g.at(u, v) = rat.from_rational(t);
      g.at(v, u) = g.at(u, v);
    }
  return {rat, std::move(g)};
}

QuadForm transfer_quadratic(const RelativeEtale& E, const RelQuadForm& q) {
  if (!(q.base == E))
    throw std::domain_error("form does not live over the given extension");
  const EtaleAlgebra& K = E.base();
  const int t = E.rel_degree();
  const int m = q.dim();
  std::vector<TotalElement> ypow;
  ypow.push_back(E.one());
  for (int j = 1; j < t; ++j) ypow.push_back(E.mul(ypow.back(), E.generator()));

  Mat<EtaleElement> g(m * t, m * t, K.zero());
  for (int kk = 0; kk < m; ++kk)
    for (int u = 0; u < t; ++u)
      for (int l = 0; l < m; ++l)
        for (int v = 0; v < t; ++v) {
          TotalElement prod = E.mul(ypow[static_cast<std::size_t>(u)],
                                    E.mul(q.gram.at(kk, l),
                                          ypow[static_cast<std::size_t>(v)]));
          g.at(kk * t + u, l * t + v) = E.trace_down(prod);
        }
  return {K, std::move(g)};
}

RelQuadForm qf_extend(const RelativeEtale& E, const QuadForm& q) {
  if (!(q.base == E.base()))
    throw std::domain_error("form does not live over the extension's base");
  Mat<TotalElement> g(q.dim(), q.dim(), E.zero());
  for (int i = 0; i < q.dim(); ++i)
    for (int j = 0; j < q.dim(); ++j) g.at(i, j) = E.embed(q.gram.at(i, j));
  return {E, std::move(g)};
}

bool qf_nonsingular(const QuadForm& q) {
  for (int f = 0; f < q.base.factor_count(); ++f) {
    NumberField k = q.base.factor_field(f);
    if (k.is_zero(field_det(k, factor_gram(q, f)))) return false;
  }
  return true;
}

bool qf_nonsingular(const RelQuadForm& q) {
  const RelativeEtale& E = q.base;
  const EtaleAlgebra& K = E.base();
  const int t = E.rel_degree();
  const int m = q.dim();
  for (int f = 0; f < K.factor_count(); ++f) {
    NumberField k = K.factor_field(f);
    PolyOf<NumberField> fi = E.project_poly(E.rel_poly(), f);
    // Flatten each entry to the t x t regular representation of
    // multiplication on the power basis of y.
    Mat<UniPoly> flat(m * t, m * t, {});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        PolyOf<NumberField> e = E.project(q.gram.at(i, j), f);
        PolyOf<NumberField> col = e;
        for (int a = 0; a < t; ++a) {
          if (a > 0) {
            col.insert(col.begin(), k.zero());
            col = poly_mod(k, col, fi);
          }
          for (int b = 0; b < t; ++b) {
            UniPoly entry = (b < static_cast<int>(col.size()))
                                ? col[static_cast<std::size_t>(b)]
                                : UniPoly{};
            flat.at(i * t + b, j * t + a) = entry;
          }
        }
      }
    if (k.is_zero(field_det(k, flat))) return false;
  }
  return true;
}

}  // namespace formsig
