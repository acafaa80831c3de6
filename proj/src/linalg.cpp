#include <omp.h>

#include "modwitt/linalg.hpp"

namespace modwitt {
namespace {

// Below this many entries the thread fork costs more than the elimination.
constexpr std::size_t kParallelThreshold = 1 << 14;

// Incremental echelon form; each inserted row is reduced against all earlier
// ones, so earlier pivots stay cleared and sequential reduction is exact.
class Echelon {
 public:
  Echelon(const PrimeField& f, std::size_t length) : f_(f), length_(length) {}

  bool insert(Vector v) {
    if (v.size() != length_) throw std::invalid_argument("vector length mismatch");
    reduce(v);
    std::size_t piv = 0;
    while (piv < length_ && v[piv] == 0) ++piv;
    if (piv == length_) return false;
    Scalar s = f_.inv(v[piv]);
    for (auto& x : v) x = f_.mul(x, s);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(Vector& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Scalar a = v[pivots_[k]];
      if (!a) continue;
      Scalar na = f_.neg(a);
      for (std::size_t i = 0; i < length_; ++i)
        v[i] = f_.add(v[i], f_.mul(na, rows_[k][i]));
    }
  }

  const PrimeField& f_;
  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

RrefResult rref(Matrix m) {
  const PrimeField f = m.field();
  const std::uint64_t p = f.order();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const bool parallel = rows * cols >= kParallelThreshold;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    m.swap_rows(r, pr);
    Scalar s = f.inv(m(r, c));
    for (std::size_t k = c; k < cols; ++k) m(r, k) = f.mul(m(r, k), s);
    const auto pivot_row = m.row(r);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(rows); ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (i == r) continue;
      auto target = m.row(i);
      if (target[c] == 0) continue;
      const std::uint64_t factor = p - target[c];
      for (std::size_t k = c; k < cols; ++k)
        target[k] = static_cast<Scalar>((target[k] + factor * pivot_row[k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto [red, pivots] = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(red(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_membership(const PrimeField& field,
                                       std::span<const Vector> basis,
                                       std::span<const Scalar> v) {
  const std::size_t n = v.size();
  Matrix aug(field, n, basis.size() + 1);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (basis[c].size() != n) throw std::invalid_argument("vector length mismatch");
    for (std::size_t r = 0; r < n; ++r) aug(r, c) = basis[c][r];
  }
  for (std::size_t r = 0; r < n; ++r) aug(r, basis.size()) = v[r];
  auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == basis.size()) return std::nullopt;
  Vector coeffs(basis.size(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = red(r, basis.size());
  return coeffs;
}

std::size_t span_rank(const PrimeField& field, std::size_t length,
                      std::span<const Vector> vectors) {
  Echelon e(field, length);
  for (const auto& v : vectors) e.insert(v);
  return e.size();
}

std::vector<Vector> quotient_representatives(const PrimeField& field,
                                             std::span<const Vector> ker,
                                             std::span<const Vector> im) {
  if (ker.empty()) {
    if (!im.empty()) throw InconsistentSubspace("image is not inside the kernel span");
    return {};
  }
  const std::size_t length = ker.front().size();
  if (span_rank(field, length, ker) != ker.size())
    throw InconsistentSubspace("kernel vectors are dependent");
  Echelon e(field, length);
  for (const auto& v : im)
    if (!e.insert(v)) throw InconsistentSubspace("image vectors are dependent");
  std::vector<Vector> reps;
  for (const auto& v : ker)
    if (e.insert(v)) reps.push_back(v);
  if (e.size() != ker.size())
    throw InconsistentSubspace("image is not inside the kernel span");
  return reps;
}

}  // namespace modwitt
