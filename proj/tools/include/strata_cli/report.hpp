#ifndef STRATA_CLI_REPORT_HPP
#define STRATA_CLI_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "strata/polynomial.hpp"
#include "strata/sum_space.hpp"

namespace strata::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  /// Command line that reruns the failing case.
  std::string reproduce;

  friend bool operator==(const Check&, const Check&) = default;
};

/// The machine-readable output of one command. Results are tagged objects
/// ({"kind": "catalog_row", ...}); field order is fixed by construction.
struct ReportBundle {
  int schema_version = kSchemaVersion;
  Json invocation = Json::object();
  std::vector<Json> results;
  std::vector<Check> checks;

  bool all_pass() const;
  friend bool operator==(const ReportBundle&, const ReportBundle&) = default;
};

Json to_json(const ReportBundle& b);
ReportBundle bundle_from_json(const Json& j);

/// {"k": [..], "r": [..]} with r entries integers or "0p" / "0pp".
Json label_json(const MultiLabel& label);
/// Ascending coefficients.
Json poly_json(const IntPolynomial& p);

std::string render_json(const ReportBundle& b);
/// Closure poset of the first "poset" result as a digraph (rankdir=BT).
std::string render_dot(const ReportBundle& b);
/// Table of the "catalog_row" results.
std::string render_csv(const ReportBundle& b);

}  // namespace strata::cli

#endif  // STRATA_CLI_REPORT_HPP
