#include <stdexcept>
#include <utility>

#include "modwitt/matrix.hpp"

namespace modwitt {

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(PrimeField field, std::size_t rows,
                            std::span<const Vector> columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(PrimeField field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t ncols = rows.size() ? rows.begin()->size() : 0;
  Matrix m(field, rows.size(), ncols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("ragged rows");
    std::size_t c = 0;
    for (long long x : row) m(r, c++) = field.reduce(x);
    ++r;
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

bool Matrix::is_zero() const {
  for (Scalar x : data_)
    if (x) return false;
  return true;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  const std::uint64_t p = field_.order();
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += static_cast<std::uint64_t>(data_[r * cols_ + c]) * v[c];
      if (acc >= (std::uint64_t{1} << 62)) acc %= p;
    }
    out[r] = static_cast<Scalar>(acc % p);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      Scalar a = (*this)(r, k);
      if (!a) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        out(r, c) = field_.add(out(r, c), field_.mul(a, other(k, c)));
    }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

}  // namespace modwitt
