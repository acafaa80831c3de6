#pragma once

#include <random>
#include <vector>

#include "modwitt/extension.hpp"

namespace modwitt::testing {

WittElement random_witt(const PrimeField& f, std::mt19937_64& rng);
Cochain1 random_cochain1(const PrimeField& f, std::mt19937_64& rng);
Cochain2Ord random_cochain2(const PrimeField& f, std::mt19937_64& rng);
Cochain3Ord random_cochain3(const PrimeField& f, std::mt19937_64& rng);
/// Random element of ker delta2_cl with random omega basis values.
Cochain2Res random_cocycle(const PrimeField& f, std::mt19937_64& rng);

/// [f d, g d] = (f g' - g f') d computed in K[x]/(x^p - 1).
WittElement derivation_bracket(const WittElement& x, const WittElement& y);

/// Plain enumeration of all 2^{p-2} sequences (g, h, g_3, ..., g_p), left-normed
/// brackets, weight 1/(number of positions holding g).
Scalar enumerate_star(const Cochain2Ord& phi, const WittElement& g, const WittElement& h);
/// Same for the 3-cochain sum with g fixed in the first slot.
Scalar enumerate_starstar(const Cochain3Ord& alpha, const WittElement& g,
                          const WittElement& h1, const WittElement& h2);
/// omega(g) by adding the basis terms of g one at a time in `order`, using
/// enumerate_star for the corrections.
Scalar enumerate_omega(const Cochain2Res& c, const WittElement& g, const std::vector<int>& order);

/// Central part of g^[p] in the extension built from c, computed by folding
/// basis terms with Jacobson's formula evaluated inside the extension.
Scalar omega_via_extension_jacobson(const Cochain2Res& c, const WittElement& g);

}  // namespace modwitt::testing
