#include "strata_cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace strata::cli {

bool ReportBundle::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json to_json(const ReportBundle& b) {
  Json j;
  j["schema_version"] = b.schema_version;
  j["invocation"] = b.invocation;
  j["results"] = Json::array();
  for (const auto& r : b.results) j["results"].push_back(r);
  j["checks"] = Json::array();
  for (const auto& c : b.checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"reproduce", c.reproduce}});
  }
  return j;
}

ReportBundle bundle_from_json(const Json& j) {
  ReportBundle b;
  b.schema_version = j.at("schema_version").get<int>();
  if (b.schema_version != kSchemaVersion) {
    throw InvalidArgument("unsupported report schema_version " + std::to_string(b.schema_version));
  }
  b.invocation = j.at("invocation");
  for (const auto& r : j.at("results")) b.results.push_back(r);
  for (const auto& c : j.at("checks")) {
    b.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                        c.at("detail").get<std::string>(), c.at("reproduce").get<std::string>()});
  }
  return b;
}

Json label_json(const MultiLabel& label) {
  Json ks = Json::array(), rs = Json::array();
  for (const auto& p : label.parts) {
    ks.push_back(p.k);
    switch (p.r.kind) {
      case RankSymbol::Kind::prime0: rs.push_back("0p"); break;
      case RankSymbol::Kind::doubleprime0: rs.push_back("0pp"); break;
      case RankSymbol::Kind::integer: rs.push_back(p.r.value); break;
    }
  }
  return {{"k", ks}, {"r", rs}};
}

Json poly_json(const IntPolynomial& p) { return p.coefficients_i64(); }

std::string render_json(const ReportBundle& b) { return to_json(b).dump(2) + "\n"; }

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_dot(const ReportBundle& b) {
  std::ostringstream os;
  os << "digraph closure {\n  rankdir=BT;\n";
  for (const auto& r : b.results) {
    if (r.value("kind", "") != "poset") continue;
    const auto& nodes = r.at("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      os << "  n" << i << " [label=\"" << dot_escape(nodes[i].at("name").get<std::string>()) << "\"];\n";
    }
    for (const auto& e : r.at("edges")) {
      os << "  n" << e.at(0).get<std::size_t>() << " -> n" << e.at(1).get<std::size_t>() << ";\n";
    }
    break;
  }
  os << "}\n";
  return os.str();
}

std::string render_csv(const ReportBundle& b) {
  std::vector<std::string> prime_cols;
  for (const auto& r : b.results) {
    if (r.value("kind", "") != "catalog_row" || !r.contains("counts")) continue;
    for (const auto& [p, c] : r.at("counts").items()) {
      if (std::find(prime_cols.begin(), prime_cols.end(), p) == prime_cols.end()) prime_cols.push_back(p);
    }
  }
  std::ostringstream os;
  os << "label,k,dim,component_group_order";
  for (const auto& p : prime_cols) os << ",count_p" << p;
  os << "\n";
  for (const auto& r : b.results) {
    if (r.value("kind", "") != "catalog_row") continue;
    os << csv_field(r.at("name").get<std::string>()) << "," << r.at("k").get<std::size_t>() << ","
       << r.at("dim").get<std::size_t>() << "," << r.at("component_group_order").get<std::size_t>();
    for (const auto& p : prime_cols) {
      os << ",";
      if (r.contains("counts") && r.at("counts").contains(p)) os << r.at("counts").at(p).get<std::uint64_t>();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace strata::cli
