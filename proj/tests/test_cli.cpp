#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "strata_cli/commands.hpp"
#include "strata_cli/report.hpp"
#include "strata_cli/space_spec.hpp"

using namespace strata;
using namespace strata::cli;

namespace {

Options opts(const std::string& command, const std::string& space, std::optional<std::size_t> k) {
  Options o;
  o.command = command;
  o.space = SpaceSpec::parse(space);
  o.k = k;
  return o;
}

std::size_t count_kind(const ReportBundle& b, const std::string& kind) {
  std::size_t n = 0;
  for (const auto& r : b.results) n += r.value("kind", "") == kind;
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("space specs round-trip") {
    for (const char* text : {"Sp4", "O3", "Sp2+O2", "O2+O3+Sp6", "O1"}) {
      SpaceSpec s = SpaceSpec::parse(text);
      CHECK(s.to_string() == text);
      CHECK(SpaceSpec::parse(s.to_string()) == s);
    }
    SpaceSpec s = SpaceSpec::parse("Sp2+O3");
    CHECK(s.dim() == 5);
    CHECK(s.build(5).to_string() == "Sp2+O3");
  }

  TEST_CASE("bad space specs report a position") {
    CHECK_THROWS_AS(SpaceSpec::parse("Sp3"), ParseError);
    CHECK_THROWS_AS(SpaceSpec::parse("O0"), ParseError);
    CHECK_THROWS_AS(SpaceSpec::parse(""), ParseError);
    CHECK_THROWS_AS(SpaceSpec::parse("Sp2+"), ParseError);
    try {
      SpaceSpec::parse("Sp2+Q4");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
  }

  TEST_CASE("labels parse in both spellings") {
    SpaceSpec s = SpaceSpec::parse("Sp2+O2");
    MultiLabel a = parse_label(s, "((0,0),(1,0'))");
    MultiLabel b = parse_label(s, "(0,0),(1,0p)");
    CHECK(a == b);
    CHECK(a.to_string() == "((0,0),(1,0'))");
    CHECK(parse_label(s, "((0,0),(1,0pp))").parts[1].r == RankSymbol::doubleprime0());
    CHECK_THROWS_AS(parse_label(s, "((1,1),(0,0))"), InvalidArgument);
    CHECK_THROWS_AS(parse_label(s, "((1,0))"), InvalidArgument);
  }

  TEST_CASE("rows and primes") {
    CHECK(parse_rows("1,0;0,1") == std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});
    CHECK(parse_primes("3,5,7") == std::vector<unsigned>{3, 5, 7});
    CHECK_THROWS_AS(parse_primes("3,4"), InvalidArgument);
    CHECK_THROWS_AS(parse_primes("2"), InvalidArgument);
  }

  TEST_CASE("labels command") {
    CHECK(count_kind(cmd_labels(opts("labels", "Sp4", 2)), "catalog_row") == 2);
    CHECK(count_kind(cmd_labels(opts("labels", "O2", 1)), "catalog_row") == 3);
    CHECK(count_kind(cmd_labels(opts("labels", "Sp2+O2", 1)), "catalog_row") == 4);
    CHECK(count_kind(cmd_labels(opts("labels", "Sp2", 3)), "catalog_row") == 0);
  }

  TEST_CASE("classify command") {
    Options o = opts("classify", "Sp2+O2", std::nullopt);
    o.rows = "1,0,1,0";
    o.primes = {3};
    ReportBundle b = cmd_classify(o);
    REQUIRE(!b.results.empty());
    CHECK(b.results.front()["name"] == "((0,0),(1,0'))");
    o.rows = "1,0,1,0;2,0,2,0";
    CHECK_THROWS_AS(cmd_classify(o), InvalidArgument);
  }

  TEST_CASE("verify partition") {
    Options o = opts("verify", "Sp4", 2);
    o.suite = "partition";
    ReportBundle b = cmd_verify(o);
    CHECK(b.all_pass());
    REQUIRE(!b.checks.empty());
    CHECK(b.checks.front().detail == "130 = 40 + 90");
    o.suite = "nonsense";
    CHECK_THROWS_AS(cmd_verify(o), InvalidArgument);
  }

  TEST_CASE("verify fibers on O4") {
    Options o = opts("verify", "O4", 2);
    o.suite = "fibers";
    o.primes = {3, 5, 7};
    CHECK(cmd_verify(o).all_pass());
    ReportBundle f = cmd_fibers([&] {
      Options fo = opts("fibers", "O4", std::nullopt);
      fo.primes = {3, 5, 7};
      fo.label = "((2,1))";
      return fo;
    }());
    bool saw = false;
    for (const auto& r : f.results) {
      if (r.value("kind", "") == "fiber" && r["over"] == "((2,0'))") {
        CHECK(r["polynomial"] == Json::array({1, 1}));
        saw = true;
      }
    }
    CHECK(saw);
  }

  TEST_CASE("budget refusal") {
    Options o = opts("count", "O4", 2);
    o.budget = 10;
    CHECK_THROWS_AS(run(o), BudgetExceeded);
  }

  TEST_CASE("json is deterministic and round-trips") {
    Options o = opts("closure", "Sp2+O2", 1);
    o.primes = {3};
    ReportBundle a = run(o), b = run(o);
    CHECK(render_json(a) == render_json(b));
    ReportBundle back = bundle_from_json(Json::parse(render_json(a)));
    CHECK(back == a);
    CHECK(render_json(back) == render_json(a));
    Json j = to_json(a);
    CHECK(j["schema_version"] == 1);
    CHECK(j.begin().key() == "schema_version");
  }

  TEST_CASE("dot output") {
    Options o = opts("closure", "Sp2+O2", 1);
    o.primes = {3};
    std::string dot = render_dot(run(o));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("n3 -> n0") != std::string::npos);
    Options one = opts("closure", "Sp2", 1);
    one.primes = {3};
    std::string single = render_dot(run(one));
    CHECK(single.find("n0") != std::string::npos);
    CHECK(single.find("->") == std::string::npos);
  }

  TEST_CASE("csv output") {
    std::string csv = render_csv(cmd_labels(opts("labels", "Sp4", 2)));
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    CHECK(lines == 3);  // header plus two rows
    std::string empty = render_csv(cmd_labels(opts("labels", "Sp2", 3)));
    CHECK(std::count(empty.begin(), empty.end(), '\n') == 1);
  }

  TEST_CASE("covering edges drop implied relations") {
    // 0 <= 1 <= 2 and 0 <= 2
    std::vector<std::vector<bool>> leq = {{true, true, true}, {false, true, true}, {false, false, true}};
    auto e = covering_edges(leq);
    CHECK(e == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  }

  TEST_CASE("failing checks carry a reproduce line") {
    Options o = opts("verify", "O2", 1);
    o.suite = "degrees";
    o.primes = {3, 5, 7};
    ReportBundle b = cmd_verify(o);
    CHECK_FALSE(b.all_pass());
    for (const auto& c : b.checks) {
      if (!c.pass) CHECK(c.reproduce.find("strata count --space O2") != std::string::npos);
    }
  }
}
