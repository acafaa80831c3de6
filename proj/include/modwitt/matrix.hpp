#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "modwitt/field.hpp"

namespace modwitt {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(PrimeField field, std::size_t rows,
                             std::span<const Vector> columns);
  /// Entries are reduced mod p.
  static Matrix from_rows(PrimeField field,
                          std::initializer_list<std::initializer_list<long long>> rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  bool is_zero() const;

  Vector operator*(std::span<const Scalar> v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix transposed() const;

  bool operator==(const Matrix&) const = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

}  // namespace modwitt
