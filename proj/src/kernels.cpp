// Elimination and product kernels. The OpenMP versions must agree entry-for-entry
// with the serial ones; the tests and the benchmark compare both.
#include <omp.h>

#include <utility>

#include "qhb/exactla.hpp"

namespace qhb::la {

namespace {

constexpr long kParallelWork = 2048;

void swap_rows(Mat& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

Rref rref_serial(const Mat& m) {
  Rref out{m, {}, 0};
  Mat& r = out.form;
  int row = 0;
  for (int c = 0; c < r.cols() && row < r.rows(); ++c) {
    int p = row;
    while (p < r.rows() && r(p, c).is_zero()) ++p;
    if (p == r.rows()) continue;
    swap_rows(r, row, p);
    Scalar inv = r(row, c).inverse();
    for (int j = c; j < r.cols(); ++j) r(row, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, c).is_zero()) continue;
      Scalar f = r(i, c);
      for (int j = c; j < r.cols(); ++j) r(i, j).submul(f, r(row, j));
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  return out;
}

Rref rref(const Mat& m) {
  Rref out{m, {}, 0};
  Mat& r = out.form;
  const int rows = r.rows();
  const int cols = r.cols();
  std::vector<int> support;
  support.reserve(cols);
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = row;
    while (p < rows && r(p, c).is_zero()) ++p;
    if (p == rows) continue;
    swap_rows(r, row, p);
    Scalar inv = r(row, c).inverse();
    support.clear();
    for (int j = c; j < cols; ++j) {
      if (r(row, j).is_zero()) continue;
      r(row, j) *= inv;
      support.push_back(j);
    }
    const int ns = static_cast<int>(support.size());
    const int pivot_row = row;
#pragma omp parallel for schedule(dynamic, 4) if (static_cast<long>(rows) * ns > kParallelWork)
    for (int i = 0; i < rows; ++i) {
      if (i == pivot_row || r(i, c).is_zero()) continue;
      Scalar f = r(i, c);
      for (int k = 0; k < ns; ++k) r(i, support[k]).submul(f, r(pivot_row, support[k]));
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  return out;
}

Mat matmul_serial(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matmul: inner dimensions differ");
  Mat c(a.rows(), b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      for (int j = 0; j < b.cols(); ++j) c(i, j).addmul(a(i, k), b(k, j));
  return c;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matmul: inner dimensions differ");
  Mat c(a.rows(), b.cols(), a.field());
  const long work = static_cast<long>(a.rows()) * a.cols() * b.cols();
#pragma omp parallel for schedule(dynamic, 4) if (work > kParallelWork * 16)
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j).addmul(x, y);
      }
    }
  }
  return c;
}

}  // namespace qhb::la
