#include <doctest.h>

#include <algorithm>
#include <vector>

#include "strata/paving.hpp"
#include "test_util.hpp"

using namespace strata;
using strata::testing::span;

namespace {

std::vector<std::size_t> dims(const Paving& p) {
  std::vector<std::size_t> d;
  for (const auto& piece : p.pieces()) d.push_back(piece.affine_dim);
  std::sort(d.begin(), d.end());
  return d;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Every piece has p^dim points, invariants are constant, the total matches.
void check_paving(const BilinearSpace& v, std::size_t k, const std::vector<Subspace>& flag) {
  Paving pav = build_paving(v, k, flag);
  auto pts = isotropic_subspaces(v, k);
  std::vector<std::uint64_t> hits(pav.pieces().size(), 0);
  for (const auto& h : pts) {
    std::size_t id = classify_point(pav, h);
    REQUIRE(id < hits.size());
    ++hits[id];
    std::vector<std::size_t> inv;
    for (const auto& m : flag) inv.push_back(subspace_intersect(h, m).dim());
    CHECK(inv == pav.pieces()[id].invariants);
  }
  for (std::size_t i = 0; i < hits.size(); ++i)
    CHECK(hits[i] == ipow(v.field().modulus(), pav.pieces()[i].affine_dim));
  CHECK(pav.polynomial().evaluate(v.field().modulus()) == static_cast<Int128>(pts.size()));
}

}  // namespace

TEST_SUITE("paving") {
  TEST_CASE("paving examples") {
    PrimeField f(3);
    using D = std::vector<std::size_t>;
    CHECK(dims(build_paving(standard_space(FormType::skew, 2, f), 1)) == D{0, 1});
    CHECK(dims(build_paving(standard_space(FormType::symmetric, 2, f), 1)) == D{0, 0});
    Paving sp4 = build_paving(standard_space(FormType::skew, 4, f), 2);
    CHECK(dims(sp4) == D{0, 1, 2, 3});
    CHECK(sp4.polynomial() == IntPolynomial{1, 1, 1, 1});
    std::size_t total = 0;
    for (std::size_t b : sp4.branch_sizes()) total += b;
    CHECK(total == sp4.pieces().size());
  }

  TEST_CASE("classification separates the coordinate lines of Sp2") {
    PrimeField f(3);
    BilinearSpace v = standard_space(FormType::skew, 2, f);
    Paving pav = build_paving(v, 1);
    CHECK(pav.classify(span(f, 2, {{1, 0}})) != pav.classify(span(f, 2, {{0, 1}})));
    BilinearSpace o = standard_space(FormType::symmetric, 2, f);
    CHECK_THROWS_AS(build_paving(o, 1).classify(span(f, 2, {{1, 1}})), InvalidArgument);
  }

  TEST_CASE("bad flags are rejected") {
    PrimeField f(3);
    BilinearSpace v = standard_space(FormType::symmetric, 2, f);
    CHECK_THROWS_AS(build_paving(v, 1, {span(f, 2, {{1, 1}})}), InvalidArgument);
    BilinearSpace w = standard_space(FormType::skew, 4, f);
    CHECK_THROWS_AS(build_paving(w, 1, {span(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), span(f, 4, {{0, 0, 1, 0}})}),
                    InvalidArgument);
  }

  TEST_CASE("iso_count values") {
    CHECK(iso_count(FormType::skew, 2, 1) == IntPolynomial{1, 1});
    CHECK(iso_count(FormType::skew, 4, 2) == IntPolynomial{1, 1, 1, 1});
    CHECK(iso_count(FormType::symmetric, 4, 2) == IntPolynomial{2, 2});
    CHECK(iso_count(FormType::symmetric, 3, 1) == IntPolynomial{1, 1});
    CHECK(iso_count(FormType::skew, 4, 2).evaluate(5) == 156);
    CHECK(iso_count(FormType::symmetric, 4, 2).evaluate(3) == 8);
  }

  TEST_CASE("iso_count matches brute force") {
    for (Scalar p : {3u, 5u}) {
      for (FormType t : {FormType::skew, FormType::symmetric}) {
        for (std::size_t n = 1; n <= 5; ++n) {
          if (t == FormType::skew && n % 2) continue;
          BilinearSpace v = standard_space(t, n, PrimeField(p));
          for (std::size_t k = 0; k <= n; ++k) {
            CHECK(iso_count(t, n, k).evaluate(p) == static_cast<Int128>(isotropic_subspaces(v, k).size()));
          }
        }
      }
    }
  }

  TEST_CASE("paving laws, n <= 5, flags of length <= 2 through sampled isotropic lines") {
    PrimeField f(3);
    for (FormType t : {FormType::skew, FormType::symmetric}) {
      for (std::size_t n = 1; n <= 5; ++n) {
        if (t == FormType::skew && n % 2) continue;
        BilinearSpace v = standard_space(t, n, f);
        auto lines = isotropic_subspaces(v, 1);
        auto planes = n >= 2 ? isotropic_subspaces(v, 2) : std::vector<Subspace>{};
        for (std::size_t k = 0; k <= n / 2; ++k) {
          check_paving(v, k, {});
          for (std::size_t i = 0; i < lines.size(); i += 3) {
            check_paving(v, k, {lines[i]});
            for (const auto& pl : planes) {
              if (pl.contains(lines[i])) {
                check_paving(v, k, {lines[i], pl});
                break;
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("degenerate space paving") {
    PrimeField f(3);
    BilinearSpace z = zero_space(FormType::symmetric, 3, f);
    Subspace line = span(f, 3, {{1, 0, 0}});
    check_paving(z, 1, {line});
    check_paving(z, 2, {line, span(f, 3, {{1, 0, 0}, {0, 1, 0}})});
  }

  TEST_CASE("fibered partition") {
    PrimeField f(3);
    BilinearSpace sp4 = standard_space(FormType::skew, 4, f);
    Subspace line = span(f, 4, {{1, 0, 0, 0}});
    FiberedPartition r0 = fibered_partition_counts(sp4, {line}, 0, 2);
    CHECK(r0.ok);
    std::uint64_t sum = 0;
    for (const auto& p : r0.pieces) sum += p.count;
    CHECK(sum == 40);

    // zero form, M_1 = V: pairs R <= H counted by products of q-binomials
    for (std::size_t r = 0; r <= 2; ++r) {
      for (std::size_t k = r; k <= 3; ++k) {
        BilinearSpace z = zero_space(FormType::symmetric, 3, f);
        FiberedPartition fp = fibered_partition_counts(z, {Subspace::full(f, 3)}, r, k);
        CHECK(fp.ok);
        std::uint64_t total = 0;
        for (const auto& p : fp.pieces) total += p.count;
        CHECK(static_cast<Int128>(total) ==
              gaussian_binomial(3, r).evaluate(3) * gaussian_binomial(3 - r, k - r).evaluate(3));
      }
    }

    FiberedPartition empty = fibered_partition_counts(sp4, {line}, 1, 2);
    CHECK(empty.base_count == 0);
    CHECK(empty.pieces.empty());
  }
}
