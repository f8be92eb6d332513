#include <doctest.h>

#include <random>
#include <vector>

#include "strata/errors.hpp"
#include "strata/polynomial.hpp"

using namespace strata;

TEST_SUITE("polynomial") {
  TEST_CASE("arithmetic and printing") {
    IntPolynomial a{1, 1};
    IntPolynomial b{1, 0, 1};
    CHECK(a * b == IntPolynomial{1, 1, 1, 1});
    CHECK((a + b) == IntPolynomial{2, 1, 1});
    CHECK((a - a).is_zero());
    CHECK((a * b).to_string() == "q^3 + q^2 + q + 1");
    CHECK(IntPolynomial{0, -1, 1}.to_string() == "q^2 - q");
    CHECK(IntPolynomial::monomial(3, 2).degree() == 3);
    CHECK_THROWS_AS(IntPolynomial().degree(), InvalidArgument);
    CHECK(IntPolynomial{1, 0, 0}.coefficients().size() == 1);
  }

  TEST_CASE("checked arithmetic") {
    const Int128 big = static_cast<Int128>(1) << 120;
    CHECK_THROWS_AS(checked_mul(big, 256), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_add(big * 127, big * 127), ArithmeticOverflow);
    CHECK(checked_pow(3, 4) == 81);
    CHECK(int128_to_string(-big) == "-1329227995784915872903807060280344576");
    CHECK_THROWS_AS(IntPolynomial::monomial(0, big).coefficients_i64(), ArithmeticOverflow);
  }

  TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(2, 1) == IntPolynomial{1, 1});
    CHECK(gaussian_binomial(4, 2) == IntPolynomial{1, 1, 2, 1, 1});
    CHECK(gaussian_binomial(5, 0) == IntPolynomial{1});
    CHECK(gaussian_binomial(4, 2).evaluate(3) == 130);
    CHECK(gaussian_binomial(4, 2).evaluate(5) == 806);
    CHECK(gaussian_binomial(4, 2).evaluate(7) == 2850);
    CHECK(gaussian_binomial(4, 2).evaluate(11) == 16226);
    CHECK_THROWS_AS(gaussian_binomial(3, 4), InvalidArgument);
  }

  TEST_CASE("gaussian binomial symmetry, n <= 12") {
    for (std::size_t n = 0; n <= 12; ++n)
      for (std::size_t k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k) == gaussian_binomial(n, n - k));
  }

  TEST_CASE("q-Pascal recurrence") {
    for (std::size_t n = 1; n <= 10; ++n)
      for (std::size_t k = 1; k < n; ++k)
        CHECK(gaussian_binomial(n, k) ==
              gaussian_binomial(n - 1, k - 1) + IntPolynomial::monomial(k) * gaussian_binomial(n - 1, k));
  }

  TEST_CASE("interpolation examples") {
    auto a = interpolate_counts({{3, 4}, {5, 6}, {7, 8}}, 1);
    REQUIRE(a.ok());
    CHECK(a.poly == IntPolynomial{1, 1});
    auto b = interpolate_counts({{3, 130}, {5, 806}, {7, 2850}, {11, 16226}}, 4);
    REQUIRE(b.ok());
    CHECK(b.poly == gaussian_binomial(4, 2));
    CHECK_FALSE(interpolate_counts({{3, 4}, {5, 6}, {7, 9}}, 1).ok());
    CHECK_FALSE(interpolate_counts({{3, 130}, {5, 806}, {7, 2850}, {11, 15972}}, 4).ok());
    auto neg = interpolate_counts({{3, 2}, {5, 4}, {7, 6}}, 1);  // q - 1
    CHECK_FALSE(neg.ok());
    CHECK_THROWS_AS(interpolate_counts({{3, 1}, {3, 1}}, 0), InvalidArgument);
  }

  TEST_CASE("interpolation inverts evaluation") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coeff(0, 5);
    const std::vector<std::int64_t> primes{3, 5, 7, 11, 13};
    for (int t = 0; t < 200; ++t) {
      std::vector<Int128> c(1 + t % 5);
      for (auto& x : c) x = coeff(rng);
      IntPolynomial poly(c);
      std::vector<CountSample> s;
      for (auto p : primes) s.push_back({p, poly.evaluate(p)});
      auto ip = interpolate_counts(s, primes.size() - 1);
      REQUIRE(ip.ok());
      CHECK(ip.poly == poly);
    }
  }

  TEST_CASE("interpolation with fewer samples than the bound") {
    // q^4 + q^3 + 2q^2 + q + 1 from three primes needs the coefficient search
    auto ip = interpolate_counts({{3, 130}, {5, 806}, {7, 2850}}, 4);
    REQUIRE(ip.ok());
    CHECK(ip.poly == gaussian_binomial(4, 2));
    auto line = interpolate_counts({{3, 4}, {5, 6}}, 2);
    REQUIRE(line.ok());
    CHECK(line.poly == IntPolynomial{1, 1});
  }

  TEST_CASE("signed reconstruction") {
    auto s = reconstruct_signed({{3, 2}, {5, 4}, {7, 6}, {11, 10}});
    REQUIRE(s);
    CHECK(*s == IntPolynomial{-1, 1});
    auto t = reconstruct_signed({{3, 18}, {5, 100}, {7, 294}, {11, 1210}});
    REQUIRE(t);
    CHECK(*t == IntPolynomial{0, 0, -1, 1});
    CHECK_FALSE(reconstruct_signed({{3, 2}, {5, 4}, {7, 7}}));
  }

  TEST_CASE("coefficient reports") {
    auto a = coefficient_report(IntPolynomial{1, 1, 1, 1});
    CHECK(a.degree == 3);
    CHECK(a.nonnegative);
    CHECK(a.palindromic);
    auto b = coefficient_report(IntPolynomial{2, 2});
    CHECK(b.degree == 1);
    CHECK(b.palindromic);
    auto c = coefficient_report(IntPolynomial{0, 1, 1});
    CHECK(c.degree == 2);
    CHECK(c.nonnegative);
    CHECK_FALSE(c.palindromic);
    CHECK_FALSE(coefficient_report(IntPolynomial{-1, 1}).nonnegative);
  }
}
