#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modwitt/restricted.hpp"

namespace modwitt {

/// Element g + a c of E = W + Kc. Basis slot u < p is e_{u-1}; slot p is c.
struct ExtElement {
  WittElement witt;
  Scalar c = 0;

  explicit ExtElement(PrimeField f) : witt(f) {}
  ExtElement(WittElement w, Scalar central) : witt(std::move(w)), c(central) {}
  static ExtElement basis(PrimeField f, std::size_t u, Scalar coeff = 1);
  static ExtElement central(PrimeField f, Scalar coeff = 1);

  const PrimeField& field() const { return witt.field(); }
  Scalar coefficient(std::size_t u) const;
  bool is_zero() const { return c == 0 && witt.is_zero(); }
  ExtElement scaled(Scalar a) const;

  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  bool operator==(const ExtElement&) const = default;
};

/// One-dimensional restricted central extension of W built from a restricted
/// 2-cocycle (phi, omega):
///   [g + a c, h + b c] = [g,h] + phi(g,h) c,   (g + a c)^{[p]} = g^{[p]} + omega(g) c.
class CentralExtension {
 public:
  const PrimeField& field() const { return source_.field(); }
  Scalar prime() const { return field().order(); }
  std::size_t dimension() const { return prime() + 1; }
  std::size_t central_slot() const { return prime(); }

  /// Coefficient of b_w in [b_u, b_v].
  Scalar structure(std::size_t u, std::size_t v, std::size_t w) const {
    return table_[(u * dimension() + v) * dimension() + w];
  }
  ExtElement bracket_basis(std::size_t u, std::size_t v) const;
  ExtElement bracket(const ExtElement& x, const ExtElement& y) const;
  /// Overwrites [b_u, b_v] = value and [b_v, b_u] = -value.
  void set_bracket(std::size_t u, std::size_t v, const ExtElement& value);

  const ExtElement& pmap_basis(std::size_t u) const { return pmap_.at(u); }
  /// (g + a c)^{[p]} = g^{[p]} + omega(g) c, with g^{[p]} computed as a
  /// derivation power and omega through the *-property of the source cocycle.
  ExtElement pth_power(const ExtElement& x) const;

  const Cochain2Res& source_cocycle() const { return source_; }

 private:
  explicit CentralExtension(Cochain2Res source);
  friend CentralExtension build_extension_unchecked(const Cochain2Res& c);

  Cochain2Res source_;
  std::vector<Scalar> table_;
  std::vector<ExtElement> pmap_;
};

/// Throws NotACocycle unless c is a restricted 2-cocycle.
CentralExtension build_extension(const Cochain2Res& c);
/// No cocycle check; for negative controls.
CentralExtension build_extension_unchecked(const Cochain2Res& c);

class NotASplitting : public std::invalid_argument {
 public:
  NotASplitting() : std::invalid_argument("map is not a linear splitting of E -> W") {}
};

/// Linear map sigma: W -> E given on the basis.
struct Splitting {
  std::vector<ExtElement> images;  // images[i+1] = sigma(e_i)

  static Splitting canonical(const PrimeField& f);
  /// sigma(e_i) = e_i + psi(e_i) c.
  static Splitting shifted(const Cochain1& psi);
  ExtElement operator()(const WittElement& g) const;
};

/// phi(g,h) = [sigma g, sigma h] - sigma [g,h], omega(g) = sigma(g)^{[p]} - sigma(g^{[p]}).
/// With sigma shifted by psi the result is the source cocycle minus delta^1 psi.
Cochain2Res extract_cocycle(const CentralExtension& ext, const Splitting& sigma);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AxiomReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
};

/// Antisymmetry, Jacobi and centrality on all basis triples; the p-map table;
/// the three restricted axioms exhaustively on basis data plus `trials`
/// seeded random elements.
AxiomReport verify_restricted_axioms(const CentralExtension& ext, std::size_t trials,
                                     std::uint64_t seed = 0);

/// A witness psi with a - b = delta^1 psi, or nullopt when the classes differ.
/// Throws NotACocycle if either argument is not a cocycle.
std::optional<Cochain1> cohomologous(const Cochain2Res& a, const Cochain2Res& b);

enum class ExtensionKind { split, ordinary_levi_only, non_levi };
std::string_view to_string(ExtensionKind kind);

/// split: the class vanishes; ordinary_levi_only: the class is nonzero but
/// phi is an ordinary coboundary; non_levi otherwise.
ExtensionKind classify_extension(const Cochain2Res& c);

}  // namespace modwitt
