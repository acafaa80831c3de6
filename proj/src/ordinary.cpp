#include "modwitt/ordinary.hpp"

#include <stdexcept>

namespace modwitt {
namespace {

constexpr std::size_t choose2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Lexicographic rank of 0-based a < b among n symbols.
constexpr std::size_t pair_rank(std::size_t n, std::size_t a, std::size_t b) {
  return choose2(n) - choose2(n - a) + (b - a - 1);
}
constexpr std::size_t triple_rank(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
  return choose3(n) - choose3(n - a) + pair_rank(n - a - 1, b - a - 1, c - a - 1);
}

std::size_t slot(int i) { return static_cast<std::size_t>(i + 1); }

void check_range(int i, Scalar p) {
  if (i < -1 || i > static_cast<int>(p) - 2) throw std::out_of_range("basis index out of range");
}

}  // namespace

std::optional<SignedPair> wedge_normalize(int i, int j) {
  if (i == j) return std::nullopt;
  if (i < j) return SignedPair{i, j, 1};
  return SignedPair{j, i, -1};
}

WedgeBasis::WedgeBasis(Scalar p) : p_(p) {
  const int top = static_cast<int>(p) - 2;
  for (int i = -1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j) pairs_.push_back({i, j});
  for (int r = -1; r <= top; ++r)
    for (int s = r + 1; s <= top; ++s)
      for (int t = s + 1; t <= top; ++t) triples_.push_back({r, s, t});
}

std::size_t WedgeBasis::pair_index(int i, int j) const {
  check_range(i, p_);
  check_range(j, p_);
  if (i >= j) throw std::invalid_argument("pair is not canonical");
  return pair_rank(p_, slot(i), slot(j));
}

std::size_t WedgeBasis::triple_index(int r, int s, int t) const {
  check_range(r, p_);
  check_range(t, p_);
  if (!(r < s && s < t)) throw std::invalid_argument("triple is not canonical");
  return triple_rank(p_, slot(r), slot(s), slot(t));
}

Cochain1 Cochain1::dual_basis(PrimeField f, int k) {
  check_range(k, f.order());
  Cochain1 psi(f);
  psi.c[slot(k)] = 1;
  return psi;
}

Scalar Cochain1::operator()(const WittElement& g) const {
  std::uint64_t acc = 0;
  for (std::size_t t = 0; t < c.size(); ++t) acc += static_cast<std::uint64_t>(c[t]) * g.coeffs()[t];
  return static_cast<Scalar>(acc % field.order());
}

Cochain2Ord::Cochain2Ord(PrimeField f) : field(f), a(choose2(f.order()), 0) {}

Cochain2Ord::Cochain2Ord(PrimeField f, Vector coeffs) : field(f), a(std::move(coeffs)) {
  if (a.size() != choose2(f.order())) throw std::invalid_argument("expected C(p,2) coefficients");
}

Cochain2Ord Cochain2Ord::dual_basis(PrimeField f, int i, int j) {
  Cochain2Ord phi(f);
  phi.add_to(i, j, 1);
  return phi;
}

Scalar Cochain2Ord::at(int i, int j) const {
  const Scalar p = field.order();
  check_range(i, p);
  check_range(j, p);
  auto w = wedge_normalize(i, j);
  if (!w) return 0;
  Scalar v = a[pair_rank(p, slot(w->i), slot(w->j))];
  return w->sign > 0 ? v : field.neg(v);
}

void Cochain2Ord::add_to(int i, int j, Scalar v) {
  const Scalar p = field.order();
  check_range(i, p);
  check_range(j, p);
  auto w = wedge_normalize(i, j);
  if (!w) return;
  Scalar& slot_ref = a[pair_rank(p, slot(w->i), slot(w->j))];
  slot_ref = field.add(slot_ref, w->sign > 0 ? v : field.neg(v));
}

Scalar Cochain2Ord::operator()(const WittElement& g, const WittElement& h) const {
  const std::size_t p = field.order();
  const auto& x = g.coeffs();
  const auto& y = h.coeffs();
  std::uint64_t acc = 0;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j, ++idx) {
      if (!a[idx]) continue;
      std::uint64_t minor = (static_cast<std::uint64_t>(x[i]) * y[j] +
                             static_cast<std::uint64_t>(p - x[j]) * y[i]) % p;
      acc = (acc + minor * a[idx]) % p;
    }
  return static_cast<Scalar>(acc);
}

bool Cochain2Ord::is_zero() const {
  for (Scalar x : a)
    if (x) return false;
  return true;
}

Cochain2Ord& Cochain2Ord::operator+=(const Cochain2Ord& o) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = field.add(a[i], o.a[i]);
  return *this;
}

Cochain2Ord Cochain2Ord::scaled(Scalar s) const {
  Cochain2Ord out(*this);
  for (auto& x : out.a) x = field.mul(x, s);
  return out;
}

Cochain3Ord::Cochain3Ord(PrimeField f) : field(f), a(choose3(f.order()), 0) {}

Cochain3Ord::Cochain3Ord(PrimeField f, Vector coeffs) : field(f), a(std::move(coeffs)) {
  if (a.size() != choose3(f.order())) throw std::invalid_argument("expected C(p,3) coefficients");
}

Scalar Cochain3Ord::at(int r, int s, int t) const {
  const Scalar p = field.order();
  check_range(r, p);
  check_range(s, p);
  check_range(t, p);
  if (r == s || s == t || r == t) return 0;
  // sort with parity
  int sign = 1;
  if (r > s) std::swap(r, s), sign = -sign;
  if (s > t) std::swap(s, t), sign = -sign;
  if (r > s) std::swap(r, s), sign = -sign;
  Scalar v = a[triple_rank(p, slot(r), slot(s), slot(t))];
  return sign > 0 ? v : field.neg(v);
}

Scalar Cochain3Ord::operator()(const WittElement& x, const WittElement& y,
                               const WittElement& z) const {
  const std::size_t p = field.order();
  const PrimeField& f = field;
  const auto& X = x.coeffs();
  const auto& Y = y.coeffs();
  const auto& Z = z.coeffs();
  Scalar acc = 0;
  std::size_t idx = 0;
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t s = r + 1; s < p; ++s)
      for (std::size_t t = s + 1; t < p; ++t, ++idx) {
        if (!a[idx]) continue;
        // determinant of the 3x3 minor on columns r, s, t
        Scalar d = f.mul(X[r], f.sub(f.mul(Y[s], Z[t]), f.mul(Y[t], Z[s])));
        d = f.sub(d, f.mul(X[s], f.sub(f.mul(Y[r], Z[t]), f.mul(Y[t], Z[r]))));
        d = f.add(d, f.mul(X[t], f.sub(f.mul(Y[r], Z[s]), f.mul(Y[s], Z[r]))));
        acc = f.add(acc, f.mul(d, a[idx]));
      }
  return acc;
}

bool Cochain3Ord::is_zero() const {
  for (Scalar x : a)
    if (x) return false;
  return true;
}

Cochain2Ord delta1_cl(const Cochain1& psi) {
  const PrimeField& f = psi.field;
  const int p = static_cast<int>(f.order());
  Cochain2Ord out(f);
  std::size_t idx = 0;
  for (int i = -1; i <= p - 2; ++i)
    for (int j = i + 1; j <= p - 2; ++j, ++idx)
      out.a[idx] = f.mul(f.reduce(j - i), psi.c[slot(normalize_index(i + j, p))]);
  return out;
}

Cochain3Ord delta2_cl(const Cochain2Ord& phi) {
  const PrimeField& f = phi.field;
  const int p = static_cast<int>(f.order());
  Cochain3Ord out(f);
  std::size_t idx = 0;
  for (int r = -1; r <= p - 2; ++r)
    for (int s = r + 1; s <= p - 2; ++s)
      for (int t = s + 1; t <= p - 2; ++t, ++idx) {
        Scalar v = f.mul(f.reduce(s - r), phi.at(normalize_index(r + s, p), t));
        v = f.sub(v, f.mul(f.reduce(t - r), phi.at(normalize_index(r + t, p), s)));
        v = f.add(v, f.mul(f.reduce(t - s), phi.at(normalize_index(s + t, p), r)));
        out.a[idx] = v;
      }
  return out;
}

Matrix delta1_cl_matrix(const PrimeField& f) {
  const int p = static_cast<int>(f.order());
  Matrix m(f, choose2(f.order()), f.order());
  std::size_t row = 0;
  for (int i = -1; i <= p - 2; ++i)
    for (int j = i + 1; j <= p - 2; ++j, ++row)
      m(row, slot(normalize_index(i + j, p))) = f.reduce(j - i);
  return m;
}

Matrix delta2_cl_matrix(const PrimeField& f) {
  const WedgeBasis basis(f.order());
  const auto& triples = basis.triples();
  const Scalar p = f.order();
  Matrix m(f, triples.size(), basis.pairs().size());
  // row for e_{r,s,t}: coefficients of phi([e_r,e_s]^e_t) - ... in the e^{i,j}
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t row = 0; row < static_cast<std::ptrdiff_t>(triples.size()); ++row) {
    const auto [r, s, t] = triples[static_cast<std::size_t>(row)];
    auto add_term = [&](std::int64_t coeff, int a, int b) {
      auto w = wedge_normalize(normalize_index(a, p), b);
      if (!w) return;
      Scalar c = f.reduce(coeff * w->sign);
      Scalar& entry = m(static_cast<std::size_t>(row), basis.pair_index(w->i, w->j));
      entry = f.add(entry, c);
    };
    add_term(s - r, r + s, t);
    add_term(-(t - r), r + t, s);
    add_term(t - s, s + t, r);
  }
  return m;
}

GradedBlock graded_block(const PrimeField& f, int k, int degree) {
  const Scalar p = f.order();
  check_range(k, p);
  const WedgeBasis basis(p);
  GradedBlock block{Matrix(f, 0, 0), {}, {}};
  if (degree == 1) {
    block.source.push_back(slot(k));
    for (std::size_t idx = 0; idx < basis.pairs().size(); ++idx)
      if (basis.grade(basis.pairs()[idx]) == k) block.target.push_back(idx);
    Cochain2Ord image = delta1_cl(Cochain1::dual_basis(f, k));
    block.matrix = Matrix(f, block.target.size(), 1);
    for (std::size_t r = 0; r < block.target.size(); ++r) block.matrix(r, 0) = image.a[block.target[r]];
  } else if (degree == 2) {
    for (std::size_t idx = 0; idx < basis.pairs().size(); ++idx)
      if (basis.grade(basis.pairs()[idx]) == k) block.source.push_back(idx);
    for (std::size_t idx = 0; idx < basis.triples().size(); ++idx)
      if (basis.grade(basis.triples()[idx]) == k) block.target.push_back(idx);
    block.matrix = Matrix(f, block.target.size(), block.source.size());
    for (std::size_t c = 0; c < block.source.size(); ++c) {
      Cochain2Ord unit(f);
      unit.a[block.source[c]] = 1;
      Cochain3Ord image = delta2_cl(unit);
      for (std::size_t r = 0; r < block.target.size(); ++r) block.matrix(r, c) = image.a[block.target[r]];
    }
  } else {
    throw std::invalid_argument("degree must be 1 or 2");
  }
  return block;
}

std::size_t graded_component_kernel_dim(const PrimeField& f, int k, int degree) {
  GradedBlock block = graded_block(f, k, degree);
  return block.matrix.cols() - rank(block.matrix);
}

Cochain2Ord phi_one_zero(const PrimeField& f) {
  const std::int64_t p = f.order();
  if (p == 3) throw std::domain_error("phi_{1,0} needs 3 invertible (p > 3)");
  Cochain2Ord phi(f);
  for (std::int64_t n = 1; n <= (p - 1) / 2; ++n) {
    std::int64_t value = n * (n * n - 4) / 3;  // n-2, n, n+2 cover all residues mod 3
    phi.add_to(static_cast<int>(n), normalize_index(p - n, f.order()), f.reduce(value));
  }
  return phi;
}

Cochain2Ord phi_two_p_minus_four(const PrimeField& f) {
  const std::int64_t p = f.order();
  Cochain2Ord phi(f);
  for (std::int64_t n = 1; n <= (p - 1) / 2; ++n)
    phi.add_to(static_cast<int>(n), normalize_index(p - n, f.order()), f.reduce(-2 * n));
  return phi;
}

bool satisfies_grade_zero_recursion(const Cochain2Ord& phi) {
  const PrimeField& f = phi.field;
  const int p = static_cast<int>(f.order());
  const Scalar base = phi.at(-1, 1);
  for (int n = 1; 2 * n <= p - 5; ++n) {
    Scalar lhs = f.mul(f.reduce(n), phi.at(n + 2, p - n - 2));
    Scalar rhs = f.add(f.mul(f.reduce(n + 3), phi.at(n + 1, p - n - 1)),
                       f.mul(f.reduce(2 * n + 3), base));
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_ordinary_coboundary(const Cochain2Ord& phi) {
  const PrimeField& f = phi.field;
  std::vector<Vector> columns;
  for (int k = -1; k <= static_cast<int>(f.order()) - 2; ++k)
    columns.push_back(delta1_cl(Cochain1::dual_basis(f, k)).a);
  return solve_membership(f, columns, phi.a).has_value();
}

OrdinaryCohomology h_cl_dims(const PrimeField& f) {
  const int p = static_cast<int>(f.order());
  OrdinaryCohomology out;
  out.grade_kernel_dims.assign(f.order(), 0);
  std::vector<std::size_t> ranks1(f.order(), 0);
#pragma omp parallel for schedule(dynamic)
  for (int k = -1; k <= p - 2; ++k) {
    ranks1[slot(k)] = 1 - graded_component_kernel_dim(f, k, 1);
    out.grade_kernel_dims[slot(k)] = graded_component_kernel_dim(f, k, 2);
  }
  for (int k = -1; k <= p - 2; ++k) {
    out.rank_delta1 += ranks1[slot(k)];
    out.ker_delta2 += out.grade_kernel_dims[slot(k)];
  }
  out.h0 = 1;  // delta^0 = 0 with trivial coefficients
  out.h1 = f.order() - out.rank_delta1;
  out.h2 = out.ker_delta2 - out.rank_delta1;
  if (p > 3) {
    Cochain2Ord rep = phi_one_zero(f);
    if (!delta2_cl(rep).is_zero() || is_ordinary_coboundary(rep))
      throw std::logic_error("phi_{1,0} is not a nontrivial cocycle");
    out.representative = std::move(rep);
  }
  return out;
}

}  // namespace modwitt
