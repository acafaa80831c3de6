#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modwitt {

using Scalar = std::uint32_t;

class NotPrime : public std::invalid_argument {
 public:
  explicit NotPrime(std::int64_t n)
      : std::invalid_argument(std::to_string(n) + " is not prime") {}
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("zero has no inverse") {}
};

bool is_prime(std::int64_t n);

/// Arithmetic in GF(p). Scalars are canonical residues in [0, p).
class PrimeField {
 public:
  /// Throws NotPrime unless p is a prime >= 3.
  explicit PrimeField(std::int64_t p);

  Scalar order() const { return p_; }

  Scalar reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const;
  /// Throws DivisionByZero on a == 0.
  Scalar inv(Scalar a) const;
  /// The p-semilinear twist a -> a^p (the identity on GF(p), kept explicit).
  Scalar frobenius(Scalar a) const { return pow(a, p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  Scalar p_;
};

}  // namespace modwitt
