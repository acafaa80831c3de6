#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "modwitt/ordinary.hpp"

namespace modwitt {

class NotACocycle : public std::invalid_argument {
 public:
  NotACocycle() : std::invalid_argument("cochain is not a restricted 2-cocycle") {}
};

/// Restricted 2-cochain (phi, omega). omega is stored by its basis values;
/// its value elsewhere is fixed by the *-property with respect to phi.
struct Cochain2Res {
  Cochain2Ord phi;
  Vector omega_basis;  // slot i+1 holds omega(e_i)

  explicit Cochain2Res(PrimeField f) : phi(f), omega_basis(f.order(), 0) {}
  Cochain2Res(Cochain2Ord phi_part, Vector omega_values);

  const PrimeField& field() const { return phi.field; }
  /// Coordinates in K^{C(p,2)+p}: phi coefficients, then omega basis values.
  Vector coordinates() const;
  static Cochain2Res from_coordinates(PrimeField f, std::span<const Scalar> coords);
  static std::size_t dimension(Scalar p);

  Cochain2Res& operator+=(const Cochain2Res& o);
  Cochain2Res& operator-=(const Cochain2Res& o);
  friend Cochain2Res operator+(Cochain2Res a, const Cochain2Res& b) { return a += b; }
  friend Cochain2Res operator-(Cochain2Res a, const Cochain2Res& b) { return a -= b; }
  Cochain2Res scaled(Scalar s) const;
  bool operator==(const Cochain2Res&) const = default;
};

/// Restricted 3-cochain (alpha, beta); beta stored by its values on ordered
/// basis pairs, row-major: beta[(i+1)*p + (j+1)] = beta(e_i, e_j).
struct Cochain3Res {
  Cochain3Ord alpha;
  Vector beta;

  explicit Cochain3Res(PrimeField f) : alpha(f), beta(f.order() * f.order(), 0) {}
  Cochain3Res(Cochain3Ord alpha_part, Vector beta_values);

  const PrimeField& field() const { return alpha.field; }
  Scalar beta_at(int i, int j) const;
  Vector coordinates() const;
  static std::size_t dimension(Scalar p);
  bool is_zero() const;
  bool operator==(const Cochain3Res&) const = default;
};

/// Sum over (g_1, ..., g_p) with g_1 = g, g_2 = h, g_i in {g, h} of
/// phi([g_1, ..., g_{p-1}] ^ g_p) / #(g), where #(g) counts the positions
/// among all p holding g.
Scalar star_correction(const Cochain2Ord& phi, const WittElement& g, const WittElement& h);

/// Sum over (l_1, ..., l_p) in {1,2}^p with l_1 = 1, l_2 = 2 of
/// alpha(g ^ [h_{l_1}, ..., h_{l_{p-1}}] ^ h_{l_p}) / #{i : l_i = 1}.
Scalar starstar_correction(const Cochain3Ord& alpha, const WittElement& g,
                           const WittElement& h1, const WittElement& h2);

namespace serial {
Scalar star_correction(const Cochain2Ord& phi, const WittElement& g, const WittElement& h);
}

/// omega(g), folding the basis terms of g in ascending index order through
/// omega(v + a e_i) = omega(v) + a^p omega(e_i) + star_correction(phi, v, a e_i).
Scalar eval_omega(const Cochain2Res& c, const WittElement& g);
Scalar eval_omega(const Cochain2Res& c, const WittElement& g, std::span<const int> fold_order);

/// beta(g, h): linear in g, h folded through the **-property.
Scalar eval_beta(const Cochain3Res& c, const WittElement& g, const WittElement& h);

/// (delta1_cl psi, ind^1 psi) with ind^1 psi(g) = psi(g^{[p]}).
Cochain2Res delta1_res(const Cochain1& psi);

/// ind^2(phi, omega)(g, h) = phi(g, h^{[p]}) - phi([g, h, ..., h] ^ h), with
/// p - 1 copies of h inside the bracket.
Scalar ind2_at(const Cochain2Res& c, const WittElement& g, const WittElement& h);
/// ind^2 on all ordered basis pairs, row-major p x p.
Vector ind2(const Cochain2Res& c);
Cochain3Res delta2_res(const Cochain2Res& c);
bool is_cocycle(const Cochain2Res& c);

/// delta^1: K^p -> K^{C(p,2)+p}.
Matrix delta1_res_matrix(const PrimeField& f);
/// Linear map phi-coordinates -> ind^2 basis-pair values (p^2 x C(p,2)).
Matrix ind2_matrix(const PrimeField& f);
/// delta^2: K^{C(p,2)+p} -> K^{C(p,3)+p^2}; rows are alpha-block then beta-block.
Matrix delta2_res_matrix(const PrimeField& f);

/// (0, omega_i) with omega_i(sum a_j e_j) = a_i^p.
Cochain2Res omega_cocycle(const PrimeField& f, int i);
/// (phi_{1,0}, omega) with omega vanishing on the basis. Requires p > 3.
Cochain2Res virasoro_cocycle(const PrimeField& f);
/// {(phi_{1,0}, 0), (0, omega_{-1}), ..., (0, omega_{p-2})}; without the
/// first entry when p = 3.
std::vector<Cochain2Res> standard_h2_basis(const PrimeField& f);

struct RestrictedH2 {
  std::size_t ker_delta2 = 0;
  std::size_t image_delta1 = 0;
  std::size_t h2 = 0;
  std::vector<Cochain2Res> quotient_representatives;
  std::vector<Cochain2Res> standard_basis;
  bool standard_basis_in_kernel = false;
  /// standard basis + im delta^1 is a basis of ker delta^2
  bool standard_basis_completes_image = false;
};

RestrictedH2 h2_res(const PrimeField& f);

/// Image of a restricted class in H^2_cl.
struct OrdinaryClass {
  bool coboundary = false;
  Scalar coefficient = 0;  // multiple of phi_{1,0} modulo im delta1_cl
};

/// Throws NotACocycle for non-cocycles.
OrdinaryClass project_class_to_ordinary(const Cochain2Res& c);

}  // namespace modwitt
