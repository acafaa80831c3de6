#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "modwitt/extension.hpp"

namespace modwitt {

using Json = nlohmann::ordered_json;

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Largest prime for which the 2^{p-2}-term *-property enumerations and
  /// the extension axiom checks run.
  Scalar max_enum_prime = 13;
  /// Random elements per randomized Witt-algebra check.
  std::size_t random_trials = 100;
  /// Random elements per axiom in each extension check.
  std::size_t extension_trials = 10;
};

struct PrimeReport {
  Json json;
  bool passed = false;
};

/// Runs every check for one prime. Throws NotPrime on bad input.
PrimeReport verify_prime(std::int64_t p, const VerifyOptions& options);

/// {"(i,j)": a_ij, ...} over all canonical pairs.
Json cochain2_json(const Cochain2Ord& phi);
/// {"-1": v, "0": v, ...}
Json omega_json(const Vector& omega_basis);

/// Extension selector: a basis index i for E_i, or nullopt for the modular
/// Virasoro algebra.
using ExtensionSelector = std::optional<int>;

CentralExtension selected_extension(const PrimeField& f, ExtensionSelector which);
std::string extension_name(ExtensionSelector which);
std::string basis_label(Scalar p, std::size_t u);

/// Bracket triples, p-map rows and a verification stamp; the stamp reads
/// "skipped" when no verification is given.
Json extension_json(const CentralExtension& ext, ExtensionSelector which,
                    const std::optional<AxiomReport>& verification);
/// "u,v,basis,coeff" rows for every nonzero structure constant.
std::string extension_csv(const CentralExtension& ext);

}  // namespace modwitt
