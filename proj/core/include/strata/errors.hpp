#ifndef STRATA_ERRORS_HPP
#define STRATA_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace strata {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violations: bad dimensions, malformed labels, mismatched ambients.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration would visit more items than the configured budget allows.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, long double estimate, std::uint64_t budget)
      : Error(what + ": estimated " + std::to_string(static_cast<double>(estimate)) +
              " items exceeds budget " + std::to_string(budget)),
        estimate_(estimate),
        budget_(budget) {}

  long double estimate() const { return estimate_; }
  std::uint64_t budget() const { return budget_; }

 private:
  long double estimate_;
  std::uint64_t budget_;
};

/// Two nondegenerate symmetric forms of equal dimension that are not isometric
/// over F_p (their discriminants differ by a non-square).
class DiscriminantObstruction : public Error {
 public:
  using Error::Error;
};

/// Checked 128-bit arithmetic overflowed.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// Caps the number of objects a brute-force enumeration may visit.
struct EnumerationBudget {
  std::uint64_t max_items = 100'000'000;

  void require(long double estimate, const std::string& what) const {
    if (estimate > static_cast<long double>(max_items)) {
      throw BudgetExceeded(what, estimate, max_items);
    }
  }
};

}  // namespace strata

#endif  // STRATA_ERRORS_HPP
