#include "modwitt/linalg.hpp"

namespace modwitt::serial {

RrefResult rref(Matrix m) {
  const PrimeField& f = m.field();
  const std::uint64_t p = f.order();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(r, pr);
    Scalar s = f.inv(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      std::uint64_t factor = p - m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        m(i, k) = static_cast<Scalar>((m(i, k) + factor * m(r, k)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return serial::rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto [red, pivots] = serial::rref(m);
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

}  // namespace modwitt::serial
