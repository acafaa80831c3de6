#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "modwitt/field.hpp"
#include "modwitt/jacobson.hpp"

namespace modwitt {

/// Representative of m mod p in {-1, ..., p-2}.
int normalize_index(std::int64_t m, Scalar p);

/// Element of the modular Witt algebra W = Der(K[x]/(x^p - 1)) in the basis
/// e_i = x^{i+1} d/dx, i = -1, ..., p-2. Slot t stores the coefficient of
/// e_{t-1}.
class WittElement {
 public:
  explicit WittElement(PrimeField field) : field_(field), coeffs_(field.order(), 0) {}
  WittElement(PrimeField field, std::vector<Scalar> coeffs);

  static WittElement basis(PrimeField field, int i, Scalar coeff = 1);

  const PrimeField& field() const { return field_; }
  Scalar prime() const { return field_.order(); }

  /// Coefficient of e_i, i in [-1, p-2].
  Scalar operator[](int i) const { return coeffs_[slot(i)]; }
  Scalar& operator[](int i) { return coeffs_[slot(i)]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  WittElement scaled(Scalar a) const;

  WittElement& operator+=(const WittElement& o);
  WittElement& operator-=(const WittElement& o);
  friend WittElement operator+(WittElement a, const WittElement& b) { return a += b; }
  friend WittElement operator-(WittElement a, const WittElement& b) { return a -= b; }
  bool operator==(const WittElement&) const = default;

 private:
  std::size_t slot(int i) const;

  PrimeField field_;
  std::vector<Scalar> coeffs_;
};

/// Element of A = K[x]/(x^p - 1); coefficient of x^k in slot k.
struct CyclicPoly {
  PrimeField field;
  std::vector<Scalar> coeffs;

  explicit CyclicPoly(PrimeField f) : field(f), coeffs(f.order(), 0) {}
  CyclicPoly operator*(const CyclicPoly& o) const;
  CyclicPoly derivative() const;
  bool operator==(const CyclicPoly&) const = default;
};

CyclicPoly to_poly(const WittElement& g);
WittElement from_poly(const CyclicPoly& f);

/// [e_i, e_j] = (j - i) e_{i+j}, indices mod p. Throws on mismatched fields.
WittElement bracket(const WittElement& x, const WittElement& y);
/// [e_i, y] for a single basis vector; O(p).
WittElement bracket_basis_left(int i, const WittElement& y);
/// [[...[g, r_0], r_1], ...].
WittElement bracket_chain(const WittElement& g, std::span<const WittElement> rest);

/// e_0^{[p]} = e_0, e_i^{[p]} = 0 otherwise.
WittElement pth_power_basis(PrimeField field, int i);

/// s_1(g,h), ..., s_{p-1}(g,h); see jacobson.hpp for the convention.
std::vector<WittElement> jacobson_s(const WittElement& g, const WittElement& h);

/// g^{[p]} by folding the basis terms of g (ascending index) through
/// (g+h)^{[p]} = g^{[p]} + h^{[p]} + sum s_i(g,h).
WittElement pth_power(const WittElement& g);
/// Same fold with an explicit order of basis indices (must cover the support).
WittElement pth_power(const WittElement& g, std::span<const int> fold_order);

/// g^{[p]} as the derivation D^p with D = f d/dx: D^p(x) = D^{p-1}(f).
WittElement pth_power_via_derivation(const WittElement& g);

class ProportionalityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The scalar gamma with g^{[p]} = gamma * g. g must be nonzero.
Scalar gamma(const WittElement& g);

}  // namespace modwitt
