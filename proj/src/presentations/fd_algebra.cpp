#include "qha/presentations/fd_algebra.hpp"

#include <stdexcept>

#include "qha/error.hpp"

namespace qha {

FDAlgebra::FDAlgebra(Field field, std::vector<std::string> labels, std::vector<SparseVec> products, Vec unit,
                     std::vector<Vec> idempotents)
    : field_(field),
      labels_(std::move(labels)),
      table_(std::move(products)),
      unit_(std::move(unit)),
      idempotents_(std::move(idempotents)) {
  if (table_.size() != dim() * dim() || unit_.size() != dim())
    throw std::invalid_argument("FDAlgebra: inconsistent sizes");
}

Vec FDAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v[i] = 1;
  return v;
}

Vec FDAlgebra::multiply(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = field_.mul(x[i], y[j]);
      for (const auto& [k, s] : table_[i * n + j]) r[k] = field_.add(r[k], field_.mul(c, s));
    }
  }
  return r;
}

Mat FDAlgebra::left_mult(const Vec& x) const {
  const std::size_t n = dim();
  Mat m(field_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, s] : table_[i * n + j]) m(k, j) = field_.add(m(k, j), field_.mul(x[i], s));
  }
  return m;
}

Mat FDAlgebra::right_mult(const Vec& x) const {
  const std::size_t n = dim();
  Mat m(field_, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, s] : table_[i * n + j]) m(k, i) = field_.add(m(k, i), field_.mul(x[j], s));
  }
  return m;
}

bool FDAlgebra::is_associative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = multiply(basis_vector(i), basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        Vec jk = multiply(basis_vector(j), basis_vector(k));
        if (multiply(ij, basis_vector(k)) != multiply(basis_vector(i), jk)) return false;
      }
    }
  return true;
}

bool FDAlgebra::is_unital() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec b = basis_vector(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b) return false;
  }
  return true;
}

bool FDAlgebra::idempotents_are_complete() const {
  Vec sum(dim());
  for (std::size_t a = 0; a < idempotents_.size(); ++a) {
    sum = vec_add(field_, sum, idempotents_[a]);
    for (std::size_t b = 0; b < idempotents_.size(); ++b) {
      Vec p = multiply(idempotents_[a], idempotents_[b]);
      if (a == b ? p != idempotents_[a] : !vec_is_zero(p)) return false;
    }
  }
  return sum == unit_;
}

bool FDAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (multiply(basis_vector(i), basis_vector(j)) != multiply(basis_vector(j), basis_vector(i))) return false;
  return true;
}

FDAlgebra FDAlgebra::opposite() const {
  const std::size_t n = dim();
  std::vector<SparseVec> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = table_[j * n + i];
  return FDAlgebra(field_, labels_, std::move(t), unit_, idempotents_);
}

std::pair<FDAlgebra, Mat> FDAlgebra::quotient(const Mat& ideal) const {
  QuotientCoordinates qc = quotient_coordinates(ideal, dim());
  const std::size_t q = qc.projection.rows();
  std::vector<std::string> labels(q);
  std::vector<Vec> lifts(q);
  for (std::size_t k = 0; k < q; ++k) {
    lifts[k] = qc.lift.col(k);
    for (std::size_t i = 0; i < dim(); ++i)
      if (!lifts[k][i].is_zero()) labels[k] = labels_[i];
  }
  auto prod = [&](std::size_t a, std::size_t b) { return qc.projection * multiply(lifts[a], lifts[b]); };
  std::vector<Vec> idem;
  for (const auto& e : idempotents_) {
    Vec v = qc.projection * e;
    if (!vec_is_zero(v)) idem.push_back(std::move(v));
  }
  FDAlgebra quot = from_function(field_, std::move(labels), prod, qc.projection * unit_, std::move(idem));
  return {std::move(quot), qc.projection};
}

Mat FDAlgebra::ideal_generated_by(const std::vector<Vec>& gens) const {
  const std::size_t n = dim();
  std::vector<Vec> cols;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i) {
      Vec left = multiply(basis_vector(i), g);
      if (vec_is_zero(left)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        Vec v = multiply(left, basis_vector(j));
        if (!vec_is_zero(v)) cols.push_back(std::move(v));
      }
    }
  if (cols.empty()) return Mat(field_, n, 0);
  return column_space(Mat::from_columns(field_, n, cols)).basis;
}

Mat FDAlgebra::radical() const {
  const std::size_t n = dim();
  if (!field_.is_rationals() && field_.characteristic() <= n)
    throw ValidationError("Unsupported", "radical via trace form needs characteristic 0 or > dim");
  std::vector<Mat> left(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = left_mult(basis_vector(i));
  Mat gram(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat m = left[i] * left[j];
      Scalar tr;
      for (std::size_t k = 0; k < n; ++k) tr = field_.add(tr, m(k, k));
      gram(i, j) = tr;
    }
  return nullspace(gram);
}

bool operator==(const FDAlgebra& a, const FDAlgebra& b) {
  if (!(a.field_ == b.field_) || a.dim() != b.dim() || a.unit_ != b.unit_) return false;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.multiply(a.basis_vector(i), a.basis_vector(j)) != b.multiply(b.basis_vector(i), b.basis_vector(j)))
        return false;
  return true;
}

bool is_algebra_hom(const FDAlgebra& a, const FDAlgebra& b, const Mat& h) {
  if (h.cols() != a.dim() || h.rows() != b.dim()) return false;
  if (h * a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec hi = h.col(i);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = h * a.multiply(a.basis_vector(i), a.basis_vector(j));
      if (lhs != b.multiply(hi, h.col(j))) return false;
    }
  }
  return true;
}

}  // namespace qha
