#ifndef STRATA_POLYNOMIAL_HPP
#define STRATA_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strata {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

/// Integer polynomial in q with checked 128-bit coefficients, ascending order.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int128> coeffs);
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);

  static IntPolynomial constant(Int128 c) { return IntPolynomial(std::vector<Int128>{c}); }
  /// c * q^e
  static IntPolynomial monomial(std::size_t e, Int128 c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Throws InvalidArgument on the zero polynomial.
  std::size_t degree() const;
  Int128 coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Int128>& coefficients() const { return coeffs_; }
  /// Coefficients narrowed to int64; throws ArithmeticOverflow if any does not fit.
  std::vector<std::int64_t> coefficients_i64() const;

  Int128 evaluate(std::int64_t q) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human form, e.g. "q^3 + q^2 + q + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Int128> coeffs_;
};

Int128 checked_add(Int128 a, Int128 b);
Int128 checked_mul(Int128 a, Int128 b);
Int128 checked_pow(Int128 base, std::size_t e);
std::string int128_to_string(Int128 v);

/// q-binomial coefficient [n choose k]_q for 0 <= k <= n <= 16.
IntPolynomial gaussian_binomial(std::size_t n, std::size_t k);

struct CountSample {
  std::int64_t prime;
  Int128 count;
};

struct Interpolation {
  enum class Status { ok, not_polynomial, ambiguous, negative };
  Status status = Status::not_polynomial;
  IntPolynomial poly;
  std::string message;
  bool ok() const { return status == Status::ok; }
};

/// Finds the unique polynomial of degree <= degree_bound with nonnegative
/// integer coefficients matching every sample. With fewer samples than
/// degree_bound + 1 the top coefficients are searched over their (finite)
/// nonnegative range; more than one survivor is reported as ambiguous.
Interpolation interpolate_counts(const std::vector<CountSample>& samples, std::size_t degree_bound);

/// Signed reconstruction: balanced base-P digits at the largest sampled prime
/// P, accepted only if the result matches every other sample.
std::optional<IntPolynomial> reconstruct_signed(const std::vector<CountSample>& samples);

struct CoefficientReport {
  std::size_t degree;
  bool nonnegative;
  bool palindromic;
};

CoefficientReport coefficient_report(const IntPolynomial& poly);

}  // namespace strata

#endif  // STRATA_POLYNOMIAL_HPP
