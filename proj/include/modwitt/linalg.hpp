#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "modwitt/matrix.hpp"

namespace modwitt {

class InconsistentSubspace : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

// Gauss-Jordan elimination with the first nonzero entry (in row order) of
// each column as pivot, so results are reproducible and identical between
// the serial and parallel kernels.

/// OpenMP kernel; row elimination is distributed across threads.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {v : M v = 0}, one vector per free column with a 1 in that slot.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Coefficients x with sum x_i B_i = v, or nullopt when v is outside span(B).
/// B need not be independent; free coefficients are set to zero.
std::optional<Vector> solve_membership(const PrimeField& field,
                                       std::span<const Vector> basis,
                                       std::span<const Scalar> v);

/// Vectors of `ker` that extend the independent set `im` to a basis of
/// span(ker). Throws InconsistentSubspace when im is not inside span(ker)
/// or either set is dependent.
std::vector<Vector> quotient_representatives(const PrimeField& field,
                                             std::span<const Vector> ker,
                                             std::span<const Vector> im);

/// Rank of the span of a list of equal-length vectors.
std::size_t span_rank(const PrimeField& field, std::size_t length,
                      std::span<const Vector> vectors);

/// Single-threaded reference implementations kept for cross-checking.
namespace serial {
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
}  // namespace serial

}  // namespace modwitt
