#pragma once

#include <array>
#include <optional>
#include <vector>

#include "modwitt/linalg.hpp"
#include "modwitt/witt.hpp"

namespace modwitt {

// Ordinary (Chevalley-Eilenberg, trivial coefficients) cochains of W.
// Wedge bases are canonical: indices ascending in {-1, ..., p-2}.

struct SignedPair {
  int i;
  int j;
  int sign;  // +1 or -1
};

/// (i,j,+1) if i<j, (j,i,-1) if i>j, nullopt if i == j.
std::optional<SignedPair> wedge_normalize(int i, int j);

/// Canonical pairs i<j and triples r<s<t with dense index lookup.
class WedgeBasis {
 public:
  explicit WedgeBasis(Scalar p);

  Scalar prime() const { return p_; }
  const std::vector<std::array<int, 2>>& pairs() const { return pairs_; }
  const std::vector<std::array<int, 3>>& triples() const { return triples_; }
  std::size_t pair_index(int i, int j) const;  // requires i < j
  std::size_t triple_index(int r, int s, int t) const;  // requires r < s < t

  /// Grade of a wedge monomial: normalized index sum.
  int grade(const std::array<int, 2>& pr) const { return normalize_index(pr[0] + pr[1], p_); }
  int grade(const std::array<int, 3>& tr) const {
    return normalize_index(tr[0] + tr[1] + tr[2], p_);
  }

 private:
  Scalar p_;
  std::vector<std::array<int, 2>> pairs_;
  std::vector<std::array<int, 3>> triples_;
  std::vector<std::size_t> pair_lookup_;
  std::vector<std::size_t> triple_lookup_;
};

/// psi = sum c_k e^k.
struct Cochain1 {
  PrimeField field;
  Vector c;  // slot k+1 holds the coefficient of e^k

  explicit Cochain1(PrimeField f) : field(f), c(f.order(), 0) {}
  static Cochain1 dual_basis(PrimeField f, int k);
  Scalar operator()(const WittElement& g) const;
  bool operator==(const Cochain1&) const = default;
};

/// phi = sum a_{i,j} e^{i,j} over canonical pairs.
struct Cochain2Ord {
  PrimeField field;
  Vector a;

  explicit Cochain2Ord(PrimeField f);
  Cochain2Ord(PrimeField f, Vector coeffs);
  static Cochain2Ord dual_basis(PrimeField f, int i, int j);

  /// Coefficient of e^{i,j} with sign tracking for unordered (i,j).
  Scalar at(int i, int j) const;
  /// Adds v to the coefficient of e^{i,j}, normalizing the wedge.
  void add_to(int i, int j, Scalar v);
  /// phi(g ^ h).
  Scalar operator()(const WittElement& g, const WittElement& h) const;
  bool is_zero() const;

  Cochain2Ord& operator+=(const Cochain2Ord& o);
  friend Cochain2Ord operator+(Cochain2Ord x, const Cochain2Ord& y) { return x += y; }
  Cochain2Ord scaled(Scalar s) const;
  bool operator==(const Cochain2Ord&) const = default;
};

/// alpha = sum a_{r,s,t} e^{r,s,t} over canonical triples.
struct Cochain3Ord {
  PrimeField field;
  Vector a;

  explicit Cochain3Ord(PrimeField f);
  Cochain3Ord(PrimeField f, Vector coeffs);

  /// alpha(e_r ^ e_s ^ e_t) for any order of distinct indices (0 otherwise).
  Scalar at(int r, int s, int t) const;
  /// alpha(x ^ y ^ z).
  Scalar operator()(const WittElement& x, const WittElement& y, const WittElement& z) const;
  bool is_zero() const;
  bool operator==(const Cochain3Ord&) const = default;
};

/// (delta psi)(g ^ h) = psi([g,h]).
Cochain2Ord delta1_cl(const Cochain1& psi);
/// (delta phi)(g^h^k) = phi([g,h]^k) - phi([g,k]^h) + phi([h,k]^g).
Cochain3Ord delta2_cl(const Cochain2Ord& phi);

/// Matrices in the canonical dual bases: p x ... columns indexed by e^k,
/// e^{i,j} respectively.
Matrix delta1_cl_matrix(const PrimeField& f);
Matrix delta2_cl_matrix(const PrimeField& f);

/// Grade-k block of delta^degree_cl (degree 1 or 2) restricted to grade-k
/// cochains on both sides, with the index maps to the full bases.
struct GradedBlock {
  Matrix matrix;
  std::vector<std::size_t> source;  // full-basis indices of the columns
  std::vector<std::size_t> target;  // full-basis indices of the rows
};
GradedBlock graded_block(const PrimeField& f, int k, int degree);
std::size_t graded_component_kernel_dim(const PrimeField& f, int k, int degree);

/// sum_{n=1}^{(p-1)/2} n(n^2-4)/3 e^{n,p-n}. Requires p > 3.
Cochain2Ord phi_one_zero(const PrimeField& f);
/// sum_{n=1}^{(p-1)/2} -2n e^{n,p-n}, the grade-0 cochain equal to delta(e^0).
Cochain2Ord phi_two_p_minus_four(const PrimeField& f);

/// Checks n a_{n+2,p-n-2} = (n+3) a_{n+1,p-n-1} + (2n+3) a_{-1,1} for
/// 1 <= n <= (p-5)/2.
bool satisfies_grade_zero_recursion(const Cochain2Ord& phi);

struct OrdinaryCohomology {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::size_t ker_delta2 = 0;
  std::size_t rank_delta1 = 0;
  std::vector<std::size_t> grade_kernel_dims;  // ker (delta2_cl)_k, slot k+1
  std::optional<Cochain2Ord> representative;   // phi_{1,0} for p > 3
};

/// Dimensions from graded ranks; the representative is checked to be a
/// cocycle outside the coboundaries.
OrdinaryCohomology h_cl_dims(const PrimeField& f);

/// True iff phi lies in the image of delta1_cl.
bool is_ordinary_coboundary(const Cochain2Ord& phi);

}  // namespace modwitt
