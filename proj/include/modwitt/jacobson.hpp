#pragma once

#include <vector>

#include "modwitt/field.hpp"

namespace modwitt {

/// Jacobson correction terms s_1(g,h), ..., s_{p-1}(g,h) in any Lie algebra
/// given by `bracket`. Ad acts on the right and the expansion is applied to
/// g: i * s_i(g,h) is the coefficient of lambda^{i-1} in
/// [g, lambda g + h, ..., lambda g + h] with p - 1 brackets.
///
/// Elem needs operator+ and scaled(Scalar).
template <class Elem, class BracketFn>
std::vector<Elem> jacobson_terms(const PrimeField& field, const Elem& g,
                                 const Elem& h, BracketFn&& bracket) {
  const Scalar p = field.order();
  const Elem zero = g.scaled(0);
  // poly[d] = coefficient of lambda^d
  std::vector<Elem> poly(p, zero);
  poly[0] = g;
  // after k brackets the expansion has degree <= k
  for (Scalar step = 0; step + 1 < p; ++step) {
    std::vector<Elem> next(p, zero);
    for (Scalar d = 0; d <= step; ++d) {
      if (poly[d].is_zero()) continue;
      next[d] = next[d] + bracket(poly[d], h);
      next[d + 1] = next[d + 1] + bracket(poly[d], g);
    }
    poly = std::move(next);
  }
  std::vector<Elem> s;
  s.reserve(p - 1);
  for (Scalar i = 1; i < p; ++i) s.push_back(poly[i - 1].scaled(field.inv(i)));
  return s;
}

}  // namespace modwitt
