#ifndef STRATA_FIELD_HPP
#define STRATA_FIELD_HPP

#include <cstdint>
#include <optional>

namespace strata {

using Scalar = std::uint32_t;

/// The prime field F_p for an odd prime 3 <= p <= 997.
///
/// Elements are represented by their residues in [0, p). The field is a small
/// value type; inverses are computed by the extended Euclidean algorithm.
class PrimeField {
 public:
  static constexpr Scalar kMaxModulus = 997;

  explicit PrimeField(Scalar modulus);

  Scalar modulus() const { return p_; }

  Scalar reduce(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const;

  /// Euler's criterion; zero counts as a square.
  bool is_square(Scalar a) const;
  std::optional<Scalar> sqrt(Scalar a) const;
  /// Smallest non-square residue.
  Scalar non_square() const;

  /// Maps a residue to the symmetric range (-p/2, p/2].
  std::int64_t centered(Scalar a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Scalar p_;
};

bool is_prime(std::uint64_t n);

}  // namespace strata

#endif  // STRATA_FIELD_HPP
