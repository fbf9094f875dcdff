#include "qha/exactlin/linalg.hpp"

#include <stdexcept>

namespace qha {

RowReduction row_reduce(Mat m) {
  const Field f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  RowReduction out;
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    if (!m(r, c).is_one()) {
      Scalar inv = f.inv(m(r, c));
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(r, j) = f.mul(m(r, j), inv);
    }
    support.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) support.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = f.neg(m(i, c));
      for (std::size_t j : support) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = std::move(m);
  return out;
}

SolveResult solve_and_kernel(const Mat& m, const Mat& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve_and_kernel: b must have rows(m) rows");
  const Field f = m.field();
  const std::size_t n = m.cols();
  RowReduction rr = row_reduce(Mat::hstack(m, b));
  SolveResult out;

  std::vector<bool> is_pivot(n, false);
  bool consistent = true;
  std::size_t coeff_rank = 0;
  for (std::size_t k = 0; k < rr.rank; ++k) {
    if (rr.pivots[k] >= n) {
      consistent = false;
    } else {
      is_pivot[rr.pivots[k]] = true;
      ++coeff_rank;
    }
  }
  if (consistent) {
    Mat x(f, n, b.cols());
    for (std::size_t k = 0; k < coeff_rank; ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivots[k], j) = rr.rref(k, n + j);
    out.particular = std::move(x);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Mat v(f, n, 1);
    v(free, 0) = 1;
    for (std::size_t k = 0; k < coeff_rank; ++k) {
      const Scalar& a = rr.rref(k, free);
      if (!a.is_zero()) v(rr.pivots[k], 0) = f.neg(a);
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Mat& m) { return row_reduce(m).rank; }

Mat nullspace(const Mat& m) {
  const Field f = m.field();
  const std::size_t n = m.cols();
  RowReduction rr = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  Mat k(f, n, n - rr.rank);
  std::size_t col = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k(free, col) = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) {
      const Scalar& a = rr.rref(r, free);
      if (!a.is_zero()) k(rr.pivots[r], col) = f.neg(a);
    }
    ++col;
  }
  return k;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: b must have rows(m) rows");
  const std::size_t n = m.cols();
  RowReduction rr = row_reduce(Mat::hstack(m, b));
  Mat x(m.field(), n, b.cols());
  for (std::size_t k = 0; k < rr.rank; ++k) {
    if (rr.pivots[k] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivots[k], j) = rr.rref(k, n + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) return std::nullopt;
  if (m.rows() == 0) return m;
  RowReduction rr = row_reduce(Mat::hstack(m, Mat::identity(m.field(), m.rows())));
  if (rr.rank < m.rows() || rr.pivots[m.rows() - 1] >= m.rows()) return std::nullopt;
  return rr.rref.block(0, m.rows(), m.rows(), m.rows());
}

ColumnBasis column_space(const Mat& m) {
  RowReduction rr = row_reduce(m);
  ColumnBasis out;
  out.indices = rr.pivots;
  out.basis = Mat(m.field(), m.rows(), rr.rank);
  for (std::size_t k = 0; k < rr.rank; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out.basis(i, k) = m(i, rr.pivots[k]);
  return out;
}

QuotientCoordinates quotient_coordinates(const Mat& sub, std::size_t ambient) {
  const Field f = sub.field();
  if (sub.rows() != ambient) throw std::invalid_argument("quotient_coordinates: ambient mismatch");
  RowReduction rr = row_reduce(sub.transpose());
  std::vector<long> slot(ambient, -1);
  std::vector<std::size_t> free;
  {
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < ambient; ++c)
      if (!is_pivot[c]) {
        slot[c] = static_cast<long>(free.size());
        free.push_back(c);
      }
  }
  const std::size_t q = free.size();
  QuotientCoordinates out{Mat(f, q, ambient), Mat(f, ambient, q)};
  for (std::size_t k = 0; k < q; ++k) {
    out.projection(k, free[k]) = 1;
    out.lift(free[k], k) = 1;
  }
  // A pivot coordinate is congruent to minus the free part of its row.
  for (std::size_t r = 0; r < rr.rank; ++r) {
    std::size_t p = rr.pivots[r];
    for (std::size_t k = 0; k < q; ++k) {
      const Scalar& a = rr.rref(r, free[k]);
      if (!a.is_zero()) out.projection(k, p) = f.neg(a);
    }
  }
  return out;
}

bool in_span(const Mat& basis, const Mat& v) {
  if (v.cols() == 0) return true;
  return rank(Mat::hstack(basis, v)) == rank(basis);
}

bool same_span(const Mat& a, const Mat& b) {
  std::size_t ra = rank(a);
  return ra == rank(b) && rank(Mat::hstack(a, b)) == ra;
}

}  // namespace qha
