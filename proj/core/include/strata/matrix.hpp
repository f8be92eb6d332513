#ifndef STRATA_MATRIX_HPP
#define STRATA_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "strata/field.hpp"

namespace strata {

/// Dense row-major matrix over a prime field. Entries are always reduced.
class MatrixF {
 public:
  MatrixF(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Builds a matrix from integer rows; entries are reduced mod p. An empty
  /// list needs the explicit column count.
  MatrixF(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows,
          std::size_t cols = 0);
  MatrixF(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  static MatrixF identity(PrimeField field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Scalar> values);
  void append_rows(const MatrixF& other);
  void resize_rows(std::size_t rows) {
    rows_ = rows;
    data_.resize(rows * cols_);
  }
  void swap_rows(std::size_t a, std::size_t b);

  MatrixF transpose() const;
  MatrixF select_columns(std::span<const std::size_t> columns) const;
  MatrixF select_rows(std::span<const std::size_t> rows) const;

  /// Reduced row echelon form in place; zero rows are dropped. Returns the
  /// pivot column of each surviving row.
  std::vector<std::size_t> rref_in_place();
  std::size_t rank() const;
  /// Basis (as rows) of { x : M x = 0 }, in RREF.
  MatrixF kernel() const;
  Scalar determinant() const;
  /// Throws InvalidArgument if singular.
  MatrixF inverse() const;

  friend MatrixF operator*(const MatrixF& a, const MatrixF& b);
  friend bool operator==(const MatrixF& a, const MatrixF& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }
  friend bool operator<(const MatrixF& a, const MatrixF& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  const std::vector<Scalar>& data() const { return data_; }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

MatrixF operator+(const MatrixF& a, const MatrixF& b);
MatrixF operator-(const MatrixF& a, const MatrixF& b);
MatrixF scaled(const MatrixF& a, Scalar s);

/// Row vector times matrix times row vector: u^T G v.
Scalar bilinear_value(const MatrixF& gram, std::span<const Scalar> u, std::span<const Scalar> v);

/// A * G * B^T for row-basis matrices A and B.
MatrixF pairing_matrix(const MatrixF& a, const MatrixF& gram, const MatrixF& b);

}  // namespace strata

#endif  // STRATA_MATRIX_HPP
