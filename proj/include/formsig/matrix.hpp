#pragma once

// Minimal dense matrix container. Arithmetic lives with the contexts that
// know how to combine the entries.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace formsig {

template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c, const T& fill) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}

  T& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const T& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  bool square() const { return rows == cols; }
};

template <class T, class Fn>
Mat<T> mat_map(const Mat<T>& m, Fn&& fn) {
  Mat<T> r = m;
  for (auto& x : r.a) x = fn(x);
  return r;
}

template <class T>
Mat<T> mat_transpose(const Mat<T>& m) {
  Mat<T> r(m.cols, m.rows, m.a.empty() ? T{} : m.a.front());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

// Block-diagonal assembly of two matrices, padding with `zero`.
template <class T>
Mat<T> mat_block_diag(const Mat<T>& a, const Mat<T>& b, const T& zero) {
  Mat<T> r(a.rows + b.rows, a.cols + b.cols, zero);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) r.at(a.rows + i, a.cols + j) = b.at(i, j);
  return r;
}

}  // namespace formsig
