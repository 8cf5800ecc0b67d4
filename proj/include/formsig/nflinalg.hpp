#pragma once

// Small exact linear algebra over a field context: determinant and inverse
// by Gaussian elimination. Used per base factor after flattening.

#include "formsig/matrix.hpp"
#include "formsig/poly.hpp"

#include <stdexcept>

namespace formsig {

template <class F>
typename F::Elem field_det(const F& k, Mat<typename F::Elem> m) {
  if (!m.square()) throw std::domain_error("determinant of non-square matrix");
  const int n = m.rows;
  typename F::Elem det = k.one();
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!k.is_zero(m.at(r, c))) {
        pivot = r;
        break;
      }
    if (pivot < 0) return k.zero();
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = k.neg(det);
    }
    det = k.mul(det, m.at(c, c));
    const typename F::Elem inv_p = k.inv(m.at(c, c));
    for (int r = c + 1; r < n; ++r) {
      if (k.is_zero(m.at(r, c))) continue;
      const typename F::Elem f = k.mul(m.at(r, c), inv_p);
      for (int j = c; j < n; ++j)
        m.at(r, j) = k.sub(m.at(r, j), k.mul(f, m.at(c, j)));
    }
  }
  return det;
}

template <class F>
Mat<typename F::Elem> field_inverse(const F& k, Mat<typename F::Elem> m) {
  if (!m.square()) throw std::domain_error("inverse of non-square matrix");
  const int n = m.rows;
  Mat<typename F::Elem> inv(n, n, k.zero());
  for (int i = 0; i < n; ++i) inv.at(i, i) = k.one();
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!k.is_zero(m.at(r, c))) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("matrix is singular");
    if (pivot != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    const typename F::Elem ip = k.inv(m.at(c, c));
    for (int j = 0; j < n; ++j) {
      m.at(c, j) = k.mul(m.at(c, j), ip);
      inv.at(c, j) = k.mul(inv.at(c, j), ip);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || k.is_zero(m.at(r, c))) continue;
      const typename F::Elem f = m.at(r, c);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) = k.sub(m.at(r, j), k.mul(f, m.at(c, j)));
        inv.at(r, j) = k.sub(inv.at(r, j), k.mul(f, inv.at(c, j)));
      }
    }
  }
  return inv;
}

}  // namespace formsig
