#include "support.hpp"

#include "modwitt/jacobson.hpp"

namespace modwitt::testing {

namespace {

Scalar draw(const PrimeField& f, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Scalar>(0, f.order() - 1)(rng);
}

}  // namespace

WittElement random_witt(const PrimeField& f, std::mt19937_64& rng) {
  WittElement g(f);
  const int p = static_cast<int>(f.order());
  for (int i = -1; i <= p - 2; ++i) g[i] = draw(f, rng);
  return g;
}

Cochain1 random_cochain1(const PrimeField& f, std::mt19937_64& rng) {
  Cochain1 psi(f);
  for (auto& x : psi.c) x = draw(f, rng);
  return psi;
}

Cochain2Ord random_cochain2(const PrimeField& f, std::mt19937_64& rng) {
  Cochain2Ord phi(f);
  for (auto& x : phi.a) x = draw(f, rng);
  return phi;
}

Cochain3Ord random_cochain3(const PrimeField& f, std::mt19937_64& rng) {
  Cochain3Ord alpha(f);
  for (auto& x : alpha.a) x = draw(f, rng);
  return alpha;
}

Cochain2Res random_cocycle(const PrimeField& f, std::mt19937_64& rng) {
  Cochain2Res c(f);
  for (const auto& v : kernel_basis(delta2_cl_matrix(f))) {
    const Scalar s = draw(f, rng);
    for (std::size_t k = 0; k < v.size(); ++k) c.phi.a[k] = f.add(c.phi.a[k], f.mul(s, v[k]));
  }
  for (auto& x : c.omega_basis) x = draw(f, rng);
  return c;
}

WittElement derivation_bracket(const WittElement& x, const WittElement& y) {
  const PrimeField& f = x.field();
  const CyclicPoly a = to_poly(x), b = to_poly(y);
  const CyclicPoly lhs = a * b.derivative(), rhs = b * a.derivative();
  CyclicPoly out(f);
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] = f.sub(lhs.coeffs[k], rhs.coeffs[k]);
  return from_poly(out);
}

namespace {

template <class Term>
Scalar enumerate(const PrimeField& f, const WittElement& first, const WittElement& second, Term term) {
  const unsigned p = f.order();
  Scalar total = 0;
  for (unsigned mask = 0; mask < (1u << (p - 2)); ++mask) {
    std::vector<const WittElement*> seq{&first, &second};
    unsigned count = 1;
    for (unsigned k = 0; k + 2 < p; ++k) {
      const bool is_first = (mask >> k) & 1u;
      seq.push_back(is_first ? &first : &second);
      count += is_first;
    }
    WittElement chain = *seq[0];
    for (unsigned k = 1; k + 1 < p; ++k) chain = bracket(chain, *seq[k]);
    total = f.add(total, f.mul(term(chain, *seq[p - 1]), f.inv(count)));
  }
  return total;
}

}  // namespace

Scalar enumerate_star(const Cochain2Ord& phi, const WittElement& g, const WittElement& h) {
  return enumerate(phi.field, g, h,
                   [&](const WittElement& chain, const WittElement& last) { return phi(chain, last); });
}

Scalar enumerate_starstar(const Cochain3Ord& alpha, const WittElement& g, const WittElement& h1,
                          const WittElement& h2) {
  return enumerate(alpha.field, h1, h2, [&](const WittElement& chain, const WittElement& last) {
    return alpha(g, chain, last);
  });
}

Scalar enumerate_omega(const Cochain2Res& c, const WittElement& g, const std::vector<int>& order) {
  const PrimeField& f = c.field();
  WittElement partial(f);
  Scalar value = 0;
  for (int i : order) {
    if (!g[i]) continue;
    const WittElement term = WittElement::basis(f, i, g[i]);
    value = f.add(value, f.mul(f.pow(g[i], f.order()), c.omega_basis[static_cast<std::size_t>(i + 1)]));
    if (!partial.is_zero()) value = f.add(value, enumerate_star(c.phi, partial, term));
    partial += term;
  }
  return value;
}

Scalar omega_via_extension_jacobson(const Cochain2Res& c, const WittElement& g) {
  const PrimeField& f = c.field();
  const CentralExtension ext = build_extension_unchecked(c);
  const int p = static_cast<int>(f.order());
  ExtElement partial(f);
  ExtElement power(f);
  for (int i = -1; i <= p - 2; ++i) {
    if (!g[i]) continue;
    const ExtElement term = ExtElement::basis(f, static_cast<std::size_t>(i + 1), g[i]);
    // (a b_u)^[p] = a^p b_u^[p]
    power += ext.pmap_basis(static_cast<std::size_t>(i + 1)).scaled(f.pow(g[i], f.order()));
    if (!partial.is_zero()) {
      auto terms = jacobson_terms(f, partial, term, [&](const ExtElement& a, const ExtElement& b) {
        return ext.bracket(a, b);
      });
      for (const auto& s : terms) power += s;
    }
    partial += term;
  }
  return power.c;
}

}  // namespace modwitt::testing
