#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "strata/errors.hpp"
#include "strata/field.hpp"
#include "strata/matrix.hpp"
#include "strata/polynomial.hpp"
#include "strata/subspace.hpp"
#include "test_util.hpp"

using namespace strata;
using strata::testing::span;

namespace {

Subspace random_subspace(std::mt19937_64& rng, PrimeField f, std::size_t n) {
  std::uniform_int_distribution<std::size_t> rows(0, n);
  std::uniform_int_distribution<std::int64_t> entry(0, f.modulus() - 1);
  MatrixF m(f, rows(rng), n);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<Scalar>(entry(rng));
  return rref_canonicalize(m);
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("field arithmetic") {
    PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(0) == 0);
    CHECK(f.mul(3, 5) == 1);
    for (Scalar a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(3, 6) == 1);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.centered(6) == -1);
    CHECK(f.is_square(2));
    CHECK_FALSE(f.is_square(3));
    CHECK(f.non_square() == 3);
    auto s = f.sqrt(2);
    REQUIRE(s);
    CHECK(f.mul(*s, *s) == 2);
    CHECK_FALSE(f.sqrt(3));
  }

  TEST_CASE("field rejects bad moduli") {
    CHECK_THROWS_AS(PrimeField(2), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(9), InvalidArgument);
    CHECK_THROWS_AS(PrimeField(1009), InvalidArgument);
    CHECK(is_prime(997));
    CHECK_FALSE(is_prime(999));
  }

  TEST_CASE("matrix basics") {
    PrimeField f(5);
    MatrixF a(f, {{1, 2}, {3, 4}});
    CHECK(a.determinant() == f.reduce(-2));
    CHECK(a * a.inverse() == MatrixF::identity(f, 2));
    CHECK(a.transpose()(0, 1) == 3);
    CHECK(MatrixF(f, {{1, 2}, {2, 4}}).rank() == 1);
    CHECK_THROWS_AS(MatrixF(f, {{1, 2}, {2, 4}}).inverse(), InvalidArgument);
    MatrixF k = MatrixF(f, {{1, 1, 0}}).kernel();
    CHECK(k.rows() == 2);
  }

  TEST_CASE("rref canonical form") {
    PrimeField f3(3);
    CHECK(span(f3, 2, {{2, 0}, {0, 1}}) == Subspace::full(f3, 2));
    Subspace d = span(f3, 2, {{1, 1}, {2, 2}});
    CHECK(d.dim() == 1);
    CHECK(d.basis() == MatrixF(f3, {{1, 1}}));
    Subspace z = rref_canonicalize(MatrixF(f3, 0, 3));
    CHECK(z.is_zero());
    CHECK(z == Subspace(f3, 3));
  }

  TEST_CASE("rref is idempotent and scale invariant over F_3, n <= 3") {
    PrimeField f(3);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        SubspaceEnumerator(n, k, f).for_each([&](const Subspace& h) {
          CHECK(rref_canonicalize(h.basis()) == h);
          CHECK(rref_canonicalize(scaled(h.basis(), 2)) == h);
          if (h.dim() >= 2) {
            MatrixF m = h.basis();
            m.swap_rows(0, 1);
            CHECK(rref_canonicalize(m) == h);
          }
        });
      }
    }
  }

  TEST_CASE("rref is canonical on all 2 x 4 matrices over F_3 of rank 2, sampled") {
    PrimeField f(3);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> e(0, 2);
    for (int t = 0; t < 2000; ++t) {
      MatrixF m(f, 2, 4);
      for (std::size_t i = 0; i < 8; ++i) m(i / 4, i % 4) = static_cast<Scalar>(e(rng));
      Subspace h = rref_canonicalize(m);
      MatrixF g(f, {{1, 1}, {0, 2}});  // invertible row operation
      CHECK(rref_canonicalize(g * m) == h);
    }
  }

  TEST_CASE("sums and intersections") {
    PrimeField f3(3), f5(5);
    CHECK(subspace_sum(span(f3, 2, {{1, 0}}), span(f3, 2, {{0, 1}})) == Subspace::full(f3, 2));
    Subspace a = span(f5, 3, {{1, 2, 3}});
    CHECK(subspace_sum(a, a) == a);
    CHECK(subspace_sum(span(f5, 3, {{1, 0, 0}}), span(f5, 3, {{1, 1, 0}})) ==
          span(f5, 3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(subspace_intersect(span(f3, 3, {{1, 0, 0}, {0, 1, 0}}), span(f3, 3, {{0, 1, 0}, {0, 0, 1}})) ==
          span(f3, 3, {{0, 1, 0}}));
    CHECK(subspace_intersect(a, Subspace::full(f5, 3)) == a);
    CHECK(subspace_intersect(span(f3, 2, {{1, 0}}), span(f3, 2, {{0, 1}})).is_zero());
  }

  TEST_CASE("dimension formula on random pairs") {
    std::mt19937_64 rng(2024);
    for (Scalar p : {3u, 5u, 7u}) {
      PrimeField f(p);
      for (int t = 0; t < 300; ++t) {
        std::size_t n = 1 + t % 6;
        Subspace a = random_subspace(rng, f, n), b = random_subspace(rng, f, n);
        Subspace s = subspace_sum(a, b), i = subspace_intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        CHECK(s.contains(a));
        CHECK(a.contains(i));
        CHECK(b.contains(i));
      }
    }
  }

  TEST_CASE("enumeration counts") {
    CHECK(SubspaceEnumerator(2, 1, PrimeField(3)).count() == 4);
    CHECK(SubspaceEnumerator(4, 2, PrimeField(3)).count() == 130);
    SubspaceEnumerator zero(3, 0, PrimeField(5));
    REQUIRE(zero.count() == 1);
    CHECK(zero.at(0).is_zero());
  }

  TEST_CASE("enumeration is distinct, canonical and matches the q-binomial") {
    for (Scalar p : {3u, 5u, 7u}) {
      PrimeField f(p);
      for (std::size_t n = 0; n <= 5; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
          const auto expect = gaussian_binomial(n, k).evaluate(p);
          if (expect > 200000) continue;
          SubspaceEnumerator e(n, k, f);
          CHECK(static_cast<Int128>(e.count()) == expect);
          std::set<Subspace> seen;
          std::uint64_t idx = 0;
          bool ok = true;
          e.for_each([&](const Subspace& h) {
            ok = ok && h.dim() == k && rref_canonicalize(h.basis()) == h && e.index_of(h) == idx;
            seen.insert(h);
            ++idx;
          });
          CHECK(ok);
          CHECK(static_cast<Int128>(seen.size()) == expect);
        }
      }
    }
  }

  TEST_CASE("enumeration respects the budget") {
    CHECK_THROWS_AS(SubspaceEnumerator(6, 3, PrimeField(7), EnumerationBudget{1000}), BudgetExceeded);
  }

  TEST_CASE("block projections") {
    PrimeField f(3);
    const std::vector<std::size_t> blocks{2, 2};
    Subspace h = span(f, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
    CHECK(block_project(h, blocks, 0) == span(f, 2, {{1, 0}}));
    CHECK(block_project(h, blocks, 1) == span(f, 2, {{1, 0}}));
    Subspace low = span(f, 4, {{1, 1, 0, 0}});
    CHECK(block_project(low, blocks, 1).is_zero());
    Subspace diag = span(f, 4, {{1, 0, 1, 0}});
    CHECK(block_project(diag, blocks, 0).is_zero());
    CHECK(block_project(diag, blocks, 1) == span(f, 2, {{1, 0}}));
  }

  TEST_CASE("block projection dimensions telescope, n <= 4, two blocks") {
    PrimeField f(3);
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t first = 1; first < n; ++first) {
        const std::vector<std::size_t> blocks{first, n - first};
        for (std::size_t k = 0; k <= n; ++k) {
          SubspaceEnumerator(n, k, f).for_each([&](const Subspace& h) {
            CHECK(block_project(h, blocks, 0).dim() + block_project(h, blocks, 1).dim() == h.dim());
          });
        }
      }
    }
  }

  TEST_CASE("subspaces between two nested subspaces") {
    PrimeField f(3);
    Subspace a = span(f, 4, {{1, 0, 0, 0}});
    Subspace c = Subspace::full(f, 4);
    auto mids = subspaces_between(a, c, 2);
    CHECK(mids.size() == 13);  // lines of F_3^3
    for (const auto& m : mids) CHECK((m.contains(a) && m.dim() == 2));
  }
}
