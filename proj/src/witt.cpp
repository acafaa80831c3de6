#include "modwitt/witt.hpp"

#include <numeric>

namespace modwitt {

int normalize_index(std::int64_t m, Scalar p) {
  std::int64_t r = (m + 1) % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<int>(r) - 1;
}

WittElement::WittElement(PrimeField field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_.order())
    throw std::invalid_argument("Witt element needs exactly p coefficients");
  for (auto& c : coeffs_) c %= field_.order();
}

WittElement WittElement::basis(PrimeField field, int i, Scalar coeff) {
  WittElement e(field);
  e[i] = coeff % field.order();
  return e;
}

std::size_t WittElement::slot(int i) const {
  if (i < -1 || i > static_cast<int>(field_.order()) - 2)
    throw std::out_of_range("basis index out of range");
  return static_cast<std::size_t>(i + 1);
}

bool WittElement::is_zero() const {
  for (Scalar c : coeffs_)
    if (c) return false;
  return true;
}

WittElement WittElement::scaled(Scalar a) const {
  WittElement out(*this);
  for (auto& c : out.coeffs_) c = field_.mul(c, a);
  return out;
}

WittElement& WittElement::operator+=(const WittElement& o) {
  if (o.field_ != field_) throw std::invalid_argument("mismatched fields");
  for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] = field_.add(coeffs_[t], o.coeffs_[t]);
  return *this;
}

WittElement& WittElement::operator-=(const WittElement& o) {
  if (o.field_ != field_) throw std::invalid_argument("mismatched fields");
  for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] = field_.sub(coeffs_[t], o.coeffs_[t]);
  return *this;
}

CyclicPoly CyclicPoly::operator*(const CyclicPoly& o) const {
  const std::size_t p = field.order();
  std::vector<std::uint64_t> acc(p, 0);
  for (std::size_t a = 0; a < p; ++a) {
    if (!coeffs[a]) continue;
    for (std::size_t b = 0; b < p; ++b) {
      std::size_t k = a + b >= p ? a + b - p : a + b;
      acc[k] = (acc[k] + static_cast<std::uint64_t>(coeffs[a]) * o.coeffs[b]) % p;
    }
  }
  CyclicPoly out(field);
  for (std::size_t k = 0; k < p; ++k) out.coeffs[k] = static_cast<Scalar>(acc[k]);
  return out;
}

CyclicPoly CyclicPoly::derivative() const {
  CyclicPoly out(field);
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    out.coeffs[k - 1] = field.mul(coeffs[k], static_cast<Scalar>(k));
  return out;
}

CyclicPoly to_poly(const WittElement& g) {
  CyclicPoly f(g.field());
  f.coeffs = g.coeffs();
  return f;
}

WittElement from_poly(const CyclicPoly& f) { return WittElement(f.field, f.coeffs); }

WittElement bracket(const WittElement& x, const WittElement& y) {
  if (x.field() != y.field()) throw std::invalid_argument("mismatched fields");
  const PrimeField& f = x.field();
  const int p = static_cast<int>(f.order());
  const auto& xc = x.coeffs();
  const auto& yc = y.coeffs();
  WittElement out(f);
  if (p < 4096) {
    // p^2 terms of size < p^3 fit in 64 bits without reduction
    std::vector<std::uint64_t> acc(p, 0);
    for (int i = -1; i <= p - 2; ++i) {
      const std::uint64_t a = xc[i + 1];
      if (!a) continue;
      for (int j = -1; j <= p - 2; ++j) {
        const std::uint64_t b = yc[j + 1];
        if (!b || i == j) continue;
        const int k = i + j + 1 >= p ? i + j + 1 - p : i + j + 1;
        const std::uint64_t c = j > i ? j - i : j - i + p;
        acc[k] += a * b * c;
      }
    }
    for (int k = 0; k < p; ++k) out[k - 1] = static_cast<Scalar>(acc[k] % p);
    return out;
  }
  for (int i = -1; i <= p - 2; ++i) {
    Scalar a = xc[i + 1];
    if (!a) continue;
    for (int j = -1; j <= p - 2; ++j) {
      Scalar b = yc[j + 1];
      if (!b || i == j) continue;
      int k = normalize_index(i + j, p);
      out[k] = f.add(out[k], f.mul(f.mul(a, b), f.reduce(j - i)));
    }
  }
  return out;
}

WittElement bracket_basis_left(int i, const WittElement& y) {
  const PrimeField& f = y.field();
  const int p = static_cast<int>(f.order());
  WittElement out(f);
  for (int j = -1; j <= p - 2; ++j) {
    Scalar b = y[j];
    if (!b || i == j) continue;
    int k = normalize_index(i + j, p);
    out[k] = f.add(out[k], f.mul(b, f.reduce(j - i)));
  }
  return out;
}

WittElement bracket_chain(const WittElement& g, std::span<const WittElement> rest) {
  if (rest.empty()) throw std::invalid_argument("bracket chain needs at least one factor");
  WittElement acc = g;
  for (const auto& r : rest) {
    if (acc.is_zero()) break;
    acc = bracket(acc, r);
  }
  return acc;
}

WittElement pth_power_basis(PrimeField field, int i) {
  if (i < -1 || i > static_cast<int>(field.order()) - 2)
    throw std::out_of_range("basis index out of range");
  return i == 0 ? WittElement::basis(field, 0) : WittElement(field);
}

std::vector<WittElement> jacobson_s(const WittElement& g, const WittElement& h) {
  if (g.field() != h.field()) throw std::invalid_argument("mismatched fields");
  return jacobson_terms(g.field(), g, h,
                        [](const WittElement& a, const WittElement& b) { return bracket(a, b); });
}

WittElement pth_power(const WittElement& g, std::span<const int> fold_order) {
  const PrimeField& f = g.field();
  WittElement partial(f);
  WittElement power(f);
  for (int i : fold_order) {
    Scalar alpha = g[i];
    if (!alpha || partial[i]) continue;
    WittElement term = WittElement::basis(f, i, alpha);
    WittElement term_power = pth_power_basis(f, i).scaled(f.frobenius(alpha));
    if (partial.is_zero()) {
      power = term_power;
    } else {
      power += term_power;
      for (const auto& s : jacobson_s(partial, term)) power += s;
    }
    partial += term;
  }
  if (partial != g) throw std::invalid_argument("fold order does not cover the support");
  return power;
}

WittElement pth_power(const WittElement& g) {
  std::vector<int> order(g.prime());
  std::iota(order.begin(), order.end(), -1);
  return pth_power(g, order);
}

WittElement pth_power_via_derivation(const WittElement& g) {
  const CyclicPoly f = to_poly(g);
  CyclicPoly q = f;
  for (Scalar k = 0; k + 1 < g.prime(); ++k) q = f * q.derivative();
  return from_poly(q);
}

Scalar gamma(const WittElement& g) {
  if (g.is_zero()) throw std::invalid_argument("gamma is undefined at 0");
  const PrimeField& f = g.field();
  WittElement power = pth_power_via_derivation(g);
  std::size_t t = 0;
  while (g.coeffs()[t] == 0) ++t;
  Scalar gam = f.mul(power.coeffs()[t], f.inv(g.coeffs()[t]));
  if (power != g.scaled(gam))
    throw ProportionalityViolation("g^[p] is not a multiple of g");
  return gam;
}

}  // namespace modwitt
