#pragma once

#include <optional>
#include <vector>

#include "qha/exactlin/matrix.hpp"

namespace qha {

struct RowReduction {
  Mat rref;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RowReduction row_reduce(Mat m);

struct SolveResult {
  std::optional<Mat> particular;  ///< cols(m) x cols(b), present iff m·x = b is consistent
  std::vector<Mat> kernel_basis;  ///< column vectors spanning ker(m)
};

SolveResult solve_and_kernel(const Mat& m, const Mat& b);

std::size_t rank(const Mat& m);

/// Basis of ker(m) as the columns of a cols(m) x k matrix.
Mat nullspace(const Mat& m);

/// Some x with m·x = b, if one exists.
std::optional<Mat> solve(const Mat& m, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

struct ColumnBasis {
  Mat basis;                         ///< the selected columns of the input
  std::vector<std::size_t> indices;  ///< which input columns were selected
};

/// Basis of the column space, chosen greedily from the columns of m.
ColumnBasis column_space(const Mat& m);

/// Coordinates on the quotient k^n / span(cols of sub).
///   projection: q x n, kills the subspace
///   lift:       n x q, a section (projection * lift = identity)
struct QuotientCoordinates {
  Mat projection;
  Mat lift;
};

QuotientCoordinates quotient_coordinates(const Mat& sub, std::size_t ambient);

/// True when every column of v lies in the column span of basis.
bool in_span(const Mat& basis, const Mat& v);

/// True when the column spans of a and b coincide.
bool same_span(const Mat& a, const Mat& b);

}  // namespace qha
