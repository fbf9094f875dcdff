#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "qha/exactlin/field.hpp"

namespace qha {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over a Field.
class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat identity(Field field, std::size_t n);
  static Mat from_rows(Field field, std::initializer_list<std::initializer_list<long long>> rows);
  static Mat from_columns(Field field, std::size_t rows, const std::vector<Vec>& columns);
  static Mat column(Field field, const Vec& v);
  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] const std::vector<Scalar>& entries() const noexcept { return data_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] Mat scaled(const Scalar& s) const;
  [[nodiscard]] Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  [[nodiscard]] Vec col(std::size_t c) const;
  [[nodiscard]] Vec row(std::size_t r) const;
  /// Kronecker product this ⊗ other.
  [[nodiscard]] Mat kron(const Mat& other) const;

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat& operator+=(const Mat& o);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Scalar& s, const Vec& a);
bool vec_is_zero(const Vec& v);

}  // namespace qha
