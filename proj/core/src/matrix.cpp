#include "strata/matrix.hpp"

#include <algorithm>
#include <string>

#include "strata/errors.hpp"

namespace strata {

MatrixF::MatrixF(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows,
                 std::size_t cols)
    : field_(field), rows_(rows.size()), cols_(cols) {
  if (rows.size() > 0) cols_ = rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix rows");
    for (std::int64_t v : r) data_.push_back(field_.reduce(v));
  }
}

MatrixF::MatrixF(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows,
                 std::size_t cols)
    : field_(field), rows_(rows.size()), cols_(cols) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw InvalidArgument("row has " + std::to_string(r.size()) + " entries, expected " +
                            std::to_string(cols_));
    }
    for (std::int64_t v : r) data_.push_back(field_.reduce(v));
  }
}

MatrixF MatrixF::identity(PrimeField field, std::size_t n) {
  MatrixF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void MatrixF::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw InvalidArgument("append_row: column mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void MatrixF::append_rows(const MatrixF& other) {
  if (other.cols_ != cols_) throw InvalidArgument("append_rows: column mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void MatrixF::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                   data_.begin() + b * cols_);
}

MatrixF MatrixF::transpose() const {
  MatrixF t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixF MatrixF::select_columns(std::span<const std::size_t> columns) const {
  MatrixF out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  return out;
}

MatrixF MatrixF::select_rows(std::span<const std::size_t> rows) const {
  MatrixF out(field_, 0, cols_);
  for (std::size_t r : rows) out.append_row(row(r));
  return out;
}

std::vector<std::size_t> MatrixF::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t sel = lead;
    while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    swap_rows(sel, lead);
    Scalar* prow = data_.data() + lead * cols_;
    Scalar inv = field_.inv(prow[c]);
    for (std::size_t j = c; j < cols_; ++j) prow[j] = field_.mul(prow[j], inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      Scalar* xrow = data_.data() + r * cols_;
      Scalar f = xrow[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) xrow[j] = field_.sub(xrow[j], field_.mul(f, prow[j]));
    }
    pivots.push_back(c);
    ++lead;
  }
  resize_rows(lead);
  return pivots;
}

std::size_t MatrixF::rank() const {
  MatrixF copy = *this;
  return copy.rref_in_place().size();
}

MatrixF MatrixF::kernel() const {
  MatrixF red = *this;
  auto pivots = red.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  MatrixF out(field_, 0, cols_);
  std::vector<Scalar> v(cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(red(i, f));
    out.append_row(v);
  }
  out.rref_in_place();
  return out;
}

Scalar MatrixF::determinant() const {
  if (rows_ != cols_) throw InvalidArgument("determinant of non-square matrix");
  MatrixF a = *this;
  Scalar det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t sel = c;
    while (sel < rows_ && a(sel, c) == 0) ++sel;
    if (sel == rows_) return 0;
    if (sel != c) {
      a.swap_rows(sel, c);
      det = field_.neg(det);
    }
    det = field_.mul(det, a(c, c));
    Scalar inv = field_.inv(a(c, c));
    for (std::size_t r = c + 1; r < rows_; ++r) {
      Scalar f = field_.mul(a(r, c), inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) a(r, j) = field_.sub(a(r, j), field_.mul(f, a(c, j)));
    }
  }
  return det;
}

MatrixF MatrixF::inverse() const {
  if (rows_ != cols_) throw InvalidArgument("inverse of non-square matrix");
  const std::size_t n = rows_;
  MatrixF aug(field_, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = aug.rref_in_place();
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw InvalidArgument("matrix is singular");
  MatrixF inv(field_, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

MatrixF operator*(const MatrixF& a, const MatrixF& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: dimension mismatch");
  const PrimeField& f = a.field_;
  const std::uint64_t p = f.modulus();
  MatrixF out(f, a.rows_, b.cols_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      std::uint64_t x = a(i, k);
      if (x == 0) continue;
      const Scalar* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * brow[j];
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<Scalar>(acc[j] % p);
  }
  return out;
}

MatrixF operator+(const MatrixF& a, const MatrixF& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum: shape mismatch");
  MatrixF out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().add(a(r, c), b(r, c));
  return out;
}

MatrixF operator-(const MatrixF& a, const MatrixF& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix difference: shape mismatch");
  MatrixF out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().sub(a(r, c), b(r, c));
  return out;
}

MatrixF scaled(const MatrixF& a, Scalar s) {
  MatrixF out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().mul(a(r, c), s);
  return out;
}

Scalar bilinear_value(const MatrixF& gram, std::span<const Scalar> u, std::span<const Scalar> v) {
  const PrimeField& f = gram.field();
  const std::uint64_t p = f.modulus();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < v.size(); ++j) row += static_cast<std::uint64_t>(gram(i, j)) * v[j];
    total += (row % p) * u[i];
  }
  return static_cast<Scalar>(total % p);
}

MatrixF pairing_matrix(const MatrixF& a, const MatrixF& gram, const MatrixF& b) {
  return a * gram * b.transpose();
}

}  // namespace strata
