#include "modwitt/field.hpp"

namespace modwitt {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31))
    throw std::invalid_argument("modulus must fit in 31 bits");
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (!is_prime(p)) throw NotPrime(p);
  p_ = static_cast<Scalar>(p);
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  a %= p_;
  if (a == 0) throw DivisionByZero();
  return pow(a, p_ - 2);
}

}  // namespace modwitt
