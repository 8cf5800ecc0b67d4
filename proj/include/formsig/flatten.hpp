#pragma once

// Flattening of matrices over M_n(D) down to matrices over the base factor
// number fields, via the left regular representation of D and (for relative
// bases) of y on the power basis. Used for exact nonsingularity tests.

#include "formsig/involutive.hpp"
#include "formsig/nflinalg.hpp"

#include <vector>

namespace formsig {

// Left regular representation of a D-element: a d_dim x d_dim matrix of
// base elements whose columns are x * (basis element).
template <class B>
Mat<typename B::Elem> d_regular_rep(const InvAlgebraT<B>& A,
                                    const DElemT<B>& x) {
  const auto& K = A.base();
  const int dd = A.d_dim();
  Mat<typename B::Elem> m(dd, dd, K.zero());
  for (int col = 0; col < dd; ++col) {
    DElemT<B> basis = A.dzero();
    basis.c[static_cast<std::size_t>(col)] = K.one();
    DElemT<B> img = A.dmul(x, basis);
    for (int row = 0; row < dd; ++row)
      m.at(row, col) = img.c[static_cast<std::size_t>(row)];
  }
  return m;
}

// A matrix of algebra elements, flattened to base elements.
template <class B>
Mat<typename B::Elem> flatten_alg_matrix(const InvAlgebraT<B>& A,
                                         const Mat<AlgElemT<B>>& g) {
  const auto& K = A.base();
  const int n = A.n(), dd = A.d_dim();
  const int rows = g.rows * n * dd, cols = g.cols * n * dd;
  Mat<typename B::Elem> flat(rows, cols, K.zero());
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          Mat<typename B::Elem> rep = d_regular_rep(A, g.at(i, j).at(p, q));
          for (int u = 0; u < dd; ++u)
            for (int v = 0; v < dd; ++v)
              flat.at((i * n + p) * dd + u, (j * n + q) * dd + v) = rep.at(u, v);
        }
  return flat;
}

// Projection of a base-element matrix into factor i of an etale base.
inline Mat<UniPoly> project_factor(const EtaleAlgebra& K,
                                   const Mat<EtaleElement>& m, int factor) {
  (void)K;
  Mat<UniPoly> r(m.rows, m.cols, {});
  for (std::size_t t = 0; t < m.a.size(); ++t)
    r.a[t] = m.a[t].parts[static_cast<std::size_t>(factor)];
  return r;
}

// Same for the total algebra of an extension: entries expand to the t x t
// regular representation of multiplication on the power basis of y.
inline Mat<UniPoly> project_factor(const RelativeEtale& E,
                                   const Mat<TotalElement>& m, int factor) {
  NumberField k = E.base().factor_field(factor);
  PolyOf<NumberField> fi = E.project_poly(E.rel_poly(), factor);
  const int t = E.rel_degree();
  Mat<UniPoly> r(m.rows * t, m.cols * t, {});
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      PolyOf<NumberField> col = E.project(m.at(i, j), factor);
      for (int a = 0; a < t; ++a) {
        if (a > 0) {
          col.insert(col.begin(), k.zero());
          col = poly_mod(k, col, fi);
        }
        for (int b = 0; b < t; ++b)
          r.at(i * t + b, j * t + a) =
              (b < static_cast<int>(col.size())) ? col[static_cast<std::size_t>(b)]
                                                 : UniPoly{};
      }
    }
  return r;
}

inline int base_factor_count(const EtaleAlgebra& K) { return K.factor_count(); }
inline int base_factor_count(const RelativeEtale& E) {
  return E.base().factor_count();
}

inline NumberField base_factor_field(const EtaleAlgebra& K, int i) {
  return K.factor_field(i);
}
inline NumberField base_factor_field(const RelativeEtale& E, int i) {
  return E.base().factor_field(i);
}

// Exact invertibility of a matrix of base elements, factor by factor.
template <class B>
bool base_matrix_nonsingular(const B& base, const Mat<typename B::Elem>& m) {
  for (int i = 0; i < base_factor_count(base); ++i) {
    NumberField k = base_factor_field(base, i);
    if (k.is_zero(field_det(k, project_factor(base, m, i)))) return false;
  }
  return true;
}

}  // namespace formsig
