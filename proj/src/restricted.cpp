#include "modwitt/restricted.hpp"

#include <numeric>

namespace modwitt {
namespace {

std::size_t slot(int i) { return static_cast<std::size_t>(i + 1); }

// Enumerates x_1, ..., x_p with x_1 = a, x_2 = b and x_i in {a, b}, summing
// inv(#a) * <[x_1, ..., x_{p-1}], w(x_p)> where w is a linear functional
// given by its values on the basis. Subtrees whose partial bracket vanishes
// are pruned.
class ChainSum {
 public:
  ChainSum(const WittElement& a, const WittElement& b, Vector wa, Vector wb)
      : f_(a.field()), a_(a), b_(b), wa_(std::move(wa)), wb_(std::move(wb)),
        inverse_(f_.order(), 0) {
    for (Scalar k = 1; k < f_.order(); ++k) inverse_[k] = f_.inv(k);
  }

  struct Node {
    WittElement partial;
    Scalar factors;  // chain length so far
    Scalar count_a;
  };

  Node root() const { return {bracket(a_, b_), 2, 1}; }

  Scalar descend(const Node& node) const {
    if (node.partial.is_zero()) return 0;
    if (node.factors + 1 == f_.order()) return leaf(node);
    Scalar total = descend({bracket(node.partial, a_), node.factors + 1, node.count_a + 1});
    return f_.add(total, descend({bracket(node.partial, b_), node.factors + 1, node.count_a}));
  }

  /// Nodes `levels` below the root (or leaves-to-be if shallower), in
  /// deterministic order.
  std::vector<Node> frontier(Scalar levels) const {
    std::vector<Node> nodes{root()};
    for (Scalar l = 0; l < levels; ++l) {
      std::vector<Node> next;
      for (const auto& n : nodes) {
        if (n.partial.is_zero()) continue;
        if (n.factors + 1 == f_.order()) {
          next.push_back(n);
          continue;
        }
        next.push_back({bracket(n.partial, a_), n.factors + 1, n.count_a + 1});
        next.push_back({bracket(n.partial, b_), n.factors + 1, n.count_a});
      }
      nodes = std::move(next);
    }
    return nodes;
  }

  const PrimeField& field() const { return f_; }

 private:
  Scalar leaf(const Node& node) const {
    Scalar via_a = f_.mul(inverse_[node.count_a + 1], dot(node.partial, wa_));
    Scalar via_b = f_.mul(inverse_[node.count_a], dot(node.partial, wb_));
    return f_.add(via_a, via_b);
  }

  Scalar dot(const WittElement& x, const Vector& w) const {
    std::uint64_t acc = 0;
    for (std::size_t t = 0; t < w.size(); ++t) acc += static_cast<std::uint64_t>(x.coeffs()[t]) * w[t];
    return static_cast<Scalar>(acc % f_.order());
  }

  PrimeField f_;
  const WittElement& a_;
  const WittElement& b_;
  Vector wa_;
  Vector wb_;
  Vector inverse_;
};

Scalar parallel_chain_sum(const ChainSum& sum) {
  const auto nodes = sum.frontier(4);
  const std::uint64_t p = sum.field().order();
  std::uint64_t acc = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : acc)
  for (std::ptrdiff_t n = 0; n < static_cast<std::ptrdiff_t>(nodes.size()); ++n)
    acc += sum.descend(nodes[static_cast<std::size_t>(n)]);
  return static_cast<Scalar>(acc % p);
}

// w[k] = phi(e_k ^ x)
Vector pairing_functional(const Cochain2Ord& phi, const WittElement& x) {
  const PrimeField& f = phi.field;
  const int p = static_cast<int>(f.order());
  Vector w(f.order(), 0);
  for (int k = -1; k <= p - 2; ++k) w[slot(k)] = phi(WittElement::basis(f, k), x);
  return w;
}

bool trivially_zero(const WittElement& g, const WittElement& h) {
  return g.is_zero() || h.is_zero();
}

std::vector<int> ascending_indices(Scalar p) {
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), -1);
  return order;
}

}  // namespace

Cochain2Res::Cochain2Res(Cochain2Ord phi_part, Vector omega_values)
    : phi(std::move(phi_part)), omega_basis(std::move(omega_values)) {
  if (omega_basis.size() != phi.field.order())
    throw std::invalid_argument("omega needs p basis values");
}

std::size_t Cochain2Res::dimension(Scalar p) { return p * (p - 1) / 2 + p; }

Vector Cochain2Res::coordinates() const {
  Vector v = phi.a;
  v.insert(v.end(), omega_basis.begin(), omega_basis.end());
  return v;
}

Cochain2Res Cochain2Res::from_coordinates(PrimeField f, std::span<const Scalar> coords) {
  const std::size_t pairs = f.order() * (f.order() - 1) / 2;
  if (coords.size() != dimension(f.order())) throw std::invalid_argument("wrong coordinate count");
  return Cochain2Res(Cochain2Ord(f, Vector(coords.begin(), coords.begin() + pairs)),
                     Vector(coords.begin() + pairs, coords.end()));
}

Cochain2Res& Cochain2Res::operator+=(const Cochain2Res& o) {
  phi += o.phi;
  for (std::size_t i = 0; i < omega_basis.size(); ++i)
    omega_basis[i] = field().add(omega_basis[i], o.omega_basis[i]);
  return *this;
}

Cochain2Res& Cochain2Res::operator-=(const Cochain2Res& o) { return *this += o.scaled(field().order() - 1); }

Cochain2Res Cochain2Res::scaled(Scalar s) const {
  Cochain2Res out(phi.scaled(s), omega_basis);
  for (auto& x : out.omega_basis) x = field().mul(x, s);
  return out;
}

Cochain3Res::Cochain3Res(Cochain3Ord alpha_part, Vector beta_values)
    : alpha(std::move(alpha_part)), beta(std::move(beta_values)) {
  const std::size_t p = alpha.field.order();
  if (beta.size() != p * p) throw std::invalid_argument("beta needs p^2 basis values");
}

Scalar Cochain3Res::beta_at(int i, int j) const {
  const std::size_t p = field().order();
  return beta.at(slot(i) * p + slot(j));
}

std::size_t Cochain3Res::dimension(Scalar p) { return p * (p - 1) * (p - 2) / 6 + p * p; }

Vector Cochain3Res::coordinates() const {
  Vector v = alpha.a;
  v.insert(v.end(), beta.begin(), beta.end());
  return v;
}

bool Cochain3Res::is_zero() const {
  if (!alpha.is_zero()) return false;
  for (Scalar x : beta)
    if (x) return false;
  return true;
}

Scalar star_correction(const Cochain2Ord& phi, const WittElement& g, const WittElement& h) {
  if (phi.is_zero() || trivially_zero(g, h)) return 0;
  ChainSum sum(g, h, pairing_functional(phi, g), pairing_functional(phi, h));
  return parallel_chain_sum(sum);
}

Scalar serial::star_correction(const Cochain2Ord& phi, const WittElement& g, const WittElement& h) {
  if (phi.is_zero() || trivially_zero(g, h)) return 0;
  ChainSum sum(g, h, pairing_functional(phi, g), pairing_functional(phi, h));
  return sum.descend(sum.root());
}

Scalar starstar_correction(const Cochain3Ord& alpha, const WittElement& g,
                           const WittElement& h1, const WittElement& h2) {
  if (alpha.is_zero() || g.is_zero() || trivially_zero(h1, h2)) return 0;
  const PrimeField& f = alpha.field;
  const int p = static_cast<int>(f.order());
  Vector w1(f.order(), 0), w2(f.order(), 0);
  for (int k = -1; k <= p - 2; ++k) {
    const WittElement e = WittElement::basis(f, k);
    w1[slot(k)] = alpha(g, e, h1);
    w2[slot(k)] = alpha(g, e, h2);
  }
  ChainSum sum(h1, h2, std::move(w1), std::move(w2));
  return parallel_chain_sum(sum);
}

Scalar eval_omega(const Cochain2Res& c, const WittElement& g, std::span<const int> fold_order) {
  const PrimeField& f = c.field();
  WittElement partial(f);
  Scalar value = 0;
  for (int i : fold_order) {
    Scalar a = g[i];
    if (!a || partial[i]) continue;
    const WittElement term = WittElement::basis(f, i, a);
    value = f.add(value, f.mul(f.frobenius(a), c.omega_basis[slot(i)]));
    value = f.add(value, star_correction(c.phi, partial, term));
    partial += term;
  }
  if (partial != g) throw std::invalid_argument("fold order does not cover the support");
  return value;
}

Scalar eval_omega(const Cochain2Res& c, const WittElement& g) {
  const auto order = ascending_indices(c.field().order());
  return eval_omega(c, g, order);
}

Scalar eval_beta(const Cochain3Res& c, const WittElement& g, const WittElement& h) {
  const PrimeField& f = c.field();
  const int p = static_cast<int>(f.order());
  Scalar value = 0;
  for (int i = -1; i <= p - 2; ++i) {
    if (!g[i]) continue;
    const WittElement ei = WittElement::basis(f, i);
    WittElement partial(f);
    Scalar b = 0;
    for (int j = -1; j <= p - 2; ++j) {
      Scalar a = h[j];
      if (!a) continue;
      const WittElement term = WittElement::basis(f, j, a);
      b = f.add(b, f.mul(f.frobenius(a), c.beta_at(i, j)));
      b = f.sub(b, starstar_correction(c.alpha, ei, partial, term));
      partial += term;
    }
    value = f.add(value, f.mul(g[i], b));
  }
  return value;
}

Cochain2Res delta1_res(const Cochain1& psi) {
  const PrimeField& f = psi.field;
  const int p = static_cast<int>(f.order());
  Vector omega(f.order(), 0);
  for (int j = -1; j <= p - 2; ++j) omega[slot(j)] = psi(pth_power_basis(f, j));
  return Cochain2Res(delta1_cl(psi), std::move(omega));
}

Scalar ind2_at(const Cochain2Res& c, const WittElement& g, const WittElement& h) {
  const PrimeField& f = c.field();
  std::vector<WittElement> copies(f.order() - 1, h);
  const WittElement chain = bracket_chain(g, copies);
  return f.sub(c.phi(g, pth_power(h)), c.phi(chain, h));
}

Vector ind2(const Cochain2Res& c) {
  const PrimeField& f = c.field();
  const int p = static_cast<int>(f.order());
  Vector table(f.order() * f.order(), 0);
  for (int i = -1; i <= p - 2; ++i)
    for (int j = -1; j <= p - 2; ++j)
      table[slot(i) * f.order() + slot(j)] =
          ind2_at(c, WittElement::basis(f, i), WittElement::basis(f, j));
  return table;
}

Cochain3Res delta2_res(const Cochain2Res& c) { return Cochain3Res(delta2_cl(c.phi), ind2(c)); }

bool is_cocycle(const Cochain2Res& c) { return delta2_res(c).is_zero(); }

Matrix delta1_res_matrix(const PrimeField& f) {
  const int p = static_cast<int>(f.order());
  const std::size_t pairs = f.order() * (f.order() - 1) / 2;
  Matrix m(f, Cochain2Res::dimension(f.order()), f.order());
  const Matrix cl = delta1_cl_matrix(f);
  for (std::size_t r = 0; r < pairs; ++r)
    for (std::size_t c = 0; c < f.order(); ++c) m(r, c) = cl(r, c);
  // ind^1 e^k (e_j) = e^k(e_j^{[p]})
  for (int j = -1; j <= p - 2; ++j) {
    const WittElement power = pth_power_basis(f, j);
    for (int k = -1; k <= p - 2; ++k) m(pairs + slot(j), slot(k)) = power[k];
  }
  return m;
}

Matrix ind2_matrix(const PrimeField& f) {
  const Scalar p = f.order();
  const int top = static_cast<int>(p) - 2;
  const WedgeBasis basis(p);
  Matrix m(f, p * p, basis.pairs().size());
#pragma omp parallel for schedule(dynamic)
  for (int i = -1; i <= top; ++i) {
    for (int j = -1; j <= top; ++j) {
      const std::size_t row = slot(i) * p + slot(j);
      const WittElement ej = WittElement::basis(f, j);
      // phi(x ^ y) = sum_{a<b} phi_ab (x_a y_b - x_b y_a)
      auto add_pairing = [&](const WittElement& x, const WittElement& y, bool negate) {
        for (int a = -1; a <= top; ++a) {
          if (!x[a]) continue;
          for (int b = -1; b <= top; ++b) {
            if (!y[b] || a == b) continue;
            auto w = wedge_normalize(a, b);
            Scalar v = f.mul(x[a], y[b]);
            if ((w->sign < 0) != negate) v = f.neg(v);
            Scalar& entry = m(row, basis.pair_index(w->i, w->j));
            entry = f.add(entry, v);
          }
        }
      };
      WittElement chain = WittElement::basis(f, i);
      for (Scalar n = 0; n + 1 < p && !chain.is_zero(); ++n) chain = bracket(chain, ej);
      add_pairing(WittElement::basis(f, i), pth_power_basis(f, j), false);
      add_pairing(chain, ej, true);
    }
  }
  return m;
}

Matrix delta2_res_matrix(const PrimeField& f) {
  const Matrix alpha_block = delta2_cl_matrix(f);
  const Matrix beta_block = ind2_matrix(f);
  const std::size_t pairs = alpha_block.cols();
  Matrix m(f, Cochain3Res::dimension(f.order()), Cochain2Res::dimension(f.order()));
  for (std::size_t r = 0; r < alpha_block.rows(); ++r)
    for (std::size_t c = 0; c < pairs; ++c) m(r, c) = alpha_block(r, c);
  // ind^2 never reads omega: the omega columns of both blocks stay zero
  for (std::size_t r = 0; r < beta_block.rows(); ++r)
    for (std::size_t c = 0; c < pairs; ++c) m(alpha_block.rows() + r, c) = beta_block(r, c);
  return m;
}

Cochain2Res omega_cocycle(const PrimeField& f, int i) {
  if (i < -1 || i > static_cast<int>(f.order()) - 2) throw std::out_of_range("basis index out of range");
  Cochain2Res c(f);
  c.omega_basis[slot(i)] = 1;
  return c;
}

Cochain2Res virasoro_cocycle(const PrimeField& f) {
  return Cochain2Res(phi_one_zero(f), Vector(f.order(), 0));
}

std::vector<Cochain2Res> standard_h2_basis(const PrimeField& f) {
  std::vector<Cochain2Res> basis;
  if (f.order() > 3) basis.push_back(virasoro_cocycle(f));
  for (int i = -1; i <= static_cast<int>(f.order()) - 2; ++i) basis.push_back(omega_cocycle(f, i));
  return basis;
}

RestrictedH2 h2_res(const PrimeField& f) {
  const Matrix d1 = delta1_res_matrix(f);
  const Matrix d2 = delta2_res_matrix(f);
  const std::size_t dim = Cochain2Res::dimension(f.order());

  RestrictedH2 out;
  auto [d1_reduced, d1_pivots] = rref(d1);
  std::vector<Vector> image;
  for (auto c : d1_pivots) image.push_back(d1.column(c));
  const std::vector<Vector> kernel = kernel_basis(d2);
  out.image_delta1 = image.size();
  out.ker_delta2 = kernel.size();
  out.h2 = out.ker_delta2 - out.image_delta1;
  for (const auto& v : quotient_representatives(f, kernel, image))
    out.quotient_representatives.push_back(Cochain2Res::from_coordinates(f, v));

  out.standard_basis = standard_h2_basis(f);
  std::vector<Vector> combined = image;
  out.standard_basis_in_kernel = true;
  for (const auto& c : out.standard_basis) {
    Vector coords = c.coordinates();
    const Vector image_of = d2 * coords;
    for (Scalar x : image_of)
      if (x) out.standard_basis_in_kernel = false;
    combined.push_back(std::move(coords));
  }
  out.standard_basis_completes_image = out.standard_basis_in_kernel &&
                                       combined.size() == out.ker_delta2 &&
                                       span_rank(f, dim, combined) == out.ker_delta2;
  return out;
}

OrdinaryClass project_class_to_ordinary(const Cochain2Res& c) {
  if (!is_cocycle(c)) throw NotACocycle();
  const PrimeField& f = c.field();
  std::vector<Vector> columns;
  for (int k = -1; k <= static_cast<int>(f.order()) - 2; ++k)
    columns.push_back(delta1_cl(Cochain1::dual_basis(f, k)).a);
  if (solve_membership(f, columns, c.phi.a)) return {true, 0};
  // a cocycle that is not a coboundary exists only for p > 3
  columns.insert(columns.begin(), phi_one_zero(f).a);
  auto coeffs = solve_membership(f, columns, c.phi.a);
  if (!coeffs) throw std::logic_error("phi_{1,0} does not generate H^2_cl");
  return {false, (*coeffs)[0]};
}

}  // namespace modwitt
