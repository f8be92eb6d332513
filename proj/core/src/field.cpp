#include "strata/field.hpp"

#include <string>

#include "strata/errors.hpp"

namespace strata {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Scalar modulus) : p_(modulus) {
  if (modulus < 3 || modulus > kMaxModulus || !is_prime(modulus)) {
    throw InvalidArgument("field modulus must be an odd prime in [3, 997], got " +
                          std::to_string(modulus));
  }
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw InvalidArgument("division by zero in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool PrimeField::is_square(Scalar a) const {
  a %= p_;
  if (a == 0) return true;
  return pow(a, (p_ - 1) / 2) == 1;
}

std::optional<Scalar> PrimeField::sqrt(Scalar a) const {
  a %= p_;
  // p <= 997, a linear scan is cheaper than Tonelli-Shanks bookkeeping.
  for (Scalar x = 0; x <= p_ / 2; ++x) {
    if (mul(x, x) == a) return x;
  }
  return std::nullopt;
}

Scalar PrimeField::non_square() const {
  for (Scalar a = 2; a < p_; ++a) {
    if (!is_square(a)) return a;
  }
  return 0;  // unreachable for odd p
}

}  // namespace strata
