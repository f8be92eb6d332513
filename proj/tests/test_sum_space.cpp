#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "strata/polynomial.hpp"
#include "strata/sum_space.hpp"
#include "test_util.hpp"

using namespace strata;
using strata::testing::span;

namespace {

const std::vector<std::vector<FactorSpec>> kGrid = {
    {{FormType::skew, 2}},
    {{FormType::skew, 4}},
    {{FormType::symmetric, 2}},
    {{FormType::symmetric, 3}},
    {{FormType::symmetric, 4}},
    {{FormType::skew, 2}, {FormType::symmetric, 2}},
    {{FormType::skew, 2}, {FormType::skew, 2}},
    {{FormType::symmetric, 2}, {FormType::symmetric, 3}},
};

SingleLabel part(FormType t, std::size_t n, std::size_t k, RankSymbol r) { return {t, n, k, r}; }

}  // namespace

TEST_SUITE("sum_space") {
  TEST_CASE("sum space layout") {
    SumSpace s = standard_sum({{FormType::skew, 2}, {FormType::symmetric, 3}}, PrimeField(3));
    CHECK(s.dim() == 5);
    CHECK(s.offset(1) == 2);
    CHECK(s.to_string() == "Sp2+O3");
    MatrixF g = s.block_gram();
    CHECK(g(0, 1) == 1);
    CHECK(g(1, 0) == 2);
    CHECK(g(0, 2) == 0);
    CHECK(g(2, 4) == 1);
  }

  TEST_CASE("omega examples") {
    SumSpace s = standard_sum({{FormType::skew, 2}, {FormType::symmetric, 2}}, PrimeField(3));
    auto om = enumerate_omega(s, 1);
    REQUIRE(om.size() == 4);
    CHECK(om[0].to_string() == "((0,0),(1,0'))");
    CHECK(om[1].to_string() == "((0,0),(1,0''))");
    CHECK(om[2].to_string() == "((0,0),(1,1))");
    CHECK(om[3].to_string() == "((1,0),(0,0))");
    CHECK(enumerate_omega(standard_sum({{FormType::skew, 2}}, PrimeField(3)), 1).size() == 1);
    auto oo = enumerate_omega(standard_sum({{FormType::symmetric, 1}, {FormType::symmetric, 1}}, PrimeField(3)), 2);
    REQUIRE(oo.size() == 1);
    CHECK(oo[0].to_string() == "((1,1),(1,1))");
  }

  TEST_CASE("multilabel_of examples") {
    PrimeField f(3);
    SumSpace s = standard_sum({{FormType::skew, 2}, {FormType::symmetric, 2}}, f);
    CHECK(multilabel_of(s, span(f, 4, {{1, 0, 1, 0}})).to_string() == "((0,0),(1,0'))");
    CHECK(multilabel_of(s, span(f, 4, {{0, 0, 0, 1}})).to_string() == "((0,0),(1,0''))");
    CHECK(multilabel_of(s, span(f, 4, {{1, 0, 0, 0}, {0, 0, 1, 1}})).to_string() == "((1,0),(1,1))");
    MultiLabel z = multilabel_of(s, Subspace(f, 4));
    CHECK(z.k() == 0);
  }

  TEST_CASE("block projections agree with block_project") {
    PrimeField f(3);
    SumSpace s = standard_sum({{FormType::symmetric, 2}, {FormType::symmetric, 3}}, f);
    for (std::size_t k = 0; k <= 5; ++k) {
      SubspaceEnumerator(5, k, f).for_each([&](const Subspace& h) {
        auto prs = block_projections(s, h);
        CHECK(prs[0] == block_project(h, s.block_dims(), 0));
        CHECK(prs[1] == block_project(h, s.block_dims(), 1));
      });
    }
  }

  TEST_CASE("dimensions and component groups") {
    MultiLabel open{{part(FormType::skew, 2, 0, RankSymbol::integer(0)),
                     part(FormType::symmetric, 2, 1, RankSymbol::integer(1))}};
    CHECK(orbit_dim_multi(open) == 3);
    MultiLabel pt{{part(FormType::symmetric, 1, 1, RankSymbol::integer(1)),
                   part(FormType::symmetric, 1, 1, RankSymbol::integer(1))}};
    CHECK(orbit_dim_multi(pt) == 0);
    MultiLabel sp{{part(FormType::skew, 2, 1, RankSymbol::integer(0)),
                   part(FormType::skew, 4, 2, RankSymbol::integer(2))}};
    CHECK(component_group_order_multi(sp) == 1);
    MultiLabel big{{part(FormType::symmetric, 4, 2, RankSymbol::integer(2)),
                    part(FormType::symmetric, 3, 1, RankSymbol::integer(1))}};
    CHECK(component_exponent(big) == 2);
    CHECK(component_group_order_multi(big) == 4);
    MultiLabel minimal{{part(FormType::symmetric, 4, 2, RankSymbol::prime0()),
                        part(FormType::symmetric, 3, 1, RankSymbol::integer(0))}};
    CHECK(component_group_order_multi(minimal) == 1);
  }

  TEST_CASE("orbit counts for Sp2+O2, k = 1") {
    SumSpace s = standard_sum({{FormType::skew, 2}, {FormType::symmetric, 2}}, PrimeField(3));
    OrbitCensus c = orbit_census(s, 1);
    auto om = enumerate_omega(s, 1);
    CHECK(c[om[0]] == 9);
    CHECK(c[om[1]] == 9);
    CHECK(c[om[2]] == 18);
    CHECK(c[om[3]] == 4);
    MultiLabel outside{{part(FormType::skew, 2, 1, RankSymbol::integer(1)),
                        part(FormType::symmetric, 2, 0, RankSymbol::integer(0))}};
    CHECK(orbit_points_multi(s, outside) == 0);
  }

  TEST_CASE("single factor reduces to the stratum count") {
    SumSpace s = standard_sum({{FormType::symmetric, 4}}, PrimeField(3));
    for (const auto& l : enumerate_omega(s, 2))
      CHECK(orbit_points_multi(s, l) == stratum_points(s.factor(0), 2, l.parts[0].r));
  }

  TEST_CASE("partition, bundle law and degree law on the grid") {
    for (const auto& spec : kGrid) {
      std::map<MultiLabel, std::vector<CountSample>> samples;
      std::size_t n = 0;
      for (const auto& f : spec) n += f.dim;
      for (Scalar p : {3u, 5u, 7u}) {
        SumSpace s = standard_sum(spec, PrimeField(p));
        for (std::size_t k = 0; k <= n; ++k) {
          auto omega = enumerate_omega(s, k);
          std::set<MultiLabel> allowed(omega.begin(), omega.end());
          OrbitCensus c = orbit_census(s, k);
          std::uint64_t sum = 0;
          for (const auto& [l, cnt] : c) {
            CHECK(allowed.count(l) == 1);
            sum += cnt;
          }
          CHECK(static_cast<Int128>(sum) == gaussian_binomial(n, k).evaluate(p));
          for (const auto& l : omega) {
            CHECK(c[l] == orbit_points_bundle(s, l));
            samples[l].push_back({p, c[l]});
          }
        }
      }
      for (const auto& [l, ss] : samples) {
        auto poly = reconstruct_signed(ss);
        REQUIRE(poly);
        CHECK(poly->degree() == orbit_dim_multi(l));
      }
    }
  }

  TEST_CASE("slice weights") {
    MultiLabel one{{part(FormType::symmetric, 4, 2, RankSymbol::integer(1))}};
    auto r1 = slice_weights(one, {0});
    REQUIRE(r1.blocks.size() == 1);
    CHECK(r1.blocks[0].block == 'c');
    CHECK(r1.blocks[0].weight == 2);

    MultiLabel two{{part(FormType::skew, 2, 1, RankSymbol::integer(0)),
                    part(FormType::symmetric, 2, 1, RankSymbol::integer(1))}};
    auto r2 = slice_weights(two, {0, 1});
    CHECK(r2.min_weight == 1);
    CHECK(r2.all_positive);
    CHECK_THROWS_AS(slice_weights(two, {0, 0}), InvalidArgument);
  }

  TEST_CASE("slice weights are positive for random exponents") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> step(1, 50), start(-100, 100);
    for (const auto& spec : kGrid) {
      SumSpace s = standard_sum(spec, PrimeField(3));
      for (std::size_t k = 0; k <= s.dim(); ++k) {
        for (const auto& l : enumerate_omega(s, k)) {
          for (int t = 0; t < 20; ++t) {
            std::vector<long long> e{start(rng)};
            while (e.size() < spec.size()) e.push_back(e.back() + step(rng));
            auto rep = slice_weights(l, e);
            CHECK(rep.all_positive);
            CHECK(rep.min_weight >= 1);
          }
        }
      }
    }
  }
}
