#include "strata_cli/commands.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strata/paving.hpp"
#include "strata/towers.hpp"

namespace strata::cli {

namespace {

std::string shell_quote(const std::string& s) {
  if (s.find_first_of(" ()';|,\"") == std::string::npos) return s;
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::string join_primes(const std::vector<unsigned>& ps) {
  std::string s;
  for (unsigned p : ps) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

std::string reproduce(const Options& o, const std::string& cmd, std::optional<std::size_t> k,
                      const std::vector<unsigned>& primes, const std::string& extra = "") {
  std::string s = "strata " + cmd + " --space " + o.space.to_string();
  if (k) s += " --k " + std::to_string(*k);
  s += " --primes " + join_primes(primes);
  return s + extra;
}

EnumerationBudget budget_of(const Options& o) { return EnumerationBudget{o.budget}; }

std::size_t require_k(const Options& o) {
  if (!o.k) throw InvalidArgument(o.command + ": --k is required");
  return *o.k;
}

MultiLabel require_label(const Options& o) {
  if (o.label.empty()) throw InvalidArgument(o.command + ": --label is required");
  return parse_label(o.space, o.label);
}

std::uint64_t to_u64(Int128 v) { return static_cast<std::uint64_t>(v); }

std::map<unsigned, OrbitCensus> census_by_prime(const Options& o, std::size_t k) {
  std::map<unsigned, OrbitCensus> out;
  for (unsigned p : o.primes) out[p] = orbit_census(o.space.build(p), k, budget_of(o), o.workers);
  return out;
}

void partition_checks(const Options& o, std::size_t k, const std::map<unsigned, OrbitCensus>& census,
                      ReportBundle& out) {
  const std::size_t n = o.space.dim();
  for (const auto& [p, c] : census) {
    SumSpace s = o.space.build(p);
    auto omega = enumerate_omega(s, k);
    std::set<MultiLabel> allowed(omega.begin(), omega.end());
    std::uint64_t total = 0;
    std::string terms, stray;
    for (const auto& [label, cnt] : c) {
      total += cnt;
      terms += (terms.empty() ? "" : " + ") + std::to_string(cnt);
      if (!allowed.count(label)) stray = label.to_string();
    }
    const std::uint64_t expected = k <= n ? to_u64(gaussian_binomial(n, k).evaluate(p)) : 0;
    Check ch{"partition k=" + std::to_string(k) + " p=" + std::to_string(p), false, "", ""};
    ch.pass = total == expected && stray.empty();
    ch.detail = std::to_string(expected) + " = " + (terms.empty() ? "0" : terms);
    if (!stray.empty()) ch.detail += "; label outside Omega_k: " + stray;
    if (!ch.pass) ch.reproduce = reproduce(o, "verify", k, {p}, " --suite partition");
    out.checks.push_back(std::move(ch));
  }
}

Json catalog_row(const MultiLabel& l) {
  return {{"kind", "catalog_row"},
          {"name", l.to_string()},
          {"label", label_json(l)},
          {"k", l.k()},
          {"dim", orbit_dim_multi(l)},
          {"component_group_order", component_group_order_multi(l)}};
}

void degree_suite(const Options& o, std::size_t k, const std::map<unsigned, OrbitCensus>& census,
                  ReportBundle& out) {
  SumSpace s = o.space.build(o.primes.front());
  for (const auto& l : enumerate_omega(s, k)) {
    std::vector<CountSample> samples;
    Json counts = Json::object();
    for (const auto& [p, c] : census) {
      auto it = c.find(l);
      const std::uint64_t v = it == c.end() ? 0 : it->second;
      samples.push_back({static_cast<std::int64_t>(p), v});
      counts[std::to_string(p)] = v;
    }
    const std::size_t dim = orbit_dim_multi(l);
    Interpolation ip = interpolate_counts(samples, dim + 1);
    auto signed_poly = reconstruct_signed(samples);
    Json row = {{"kind", "count"}, {"name", l.to_string()}, {"label", label_json(l)},
                {"dim", dim},      {"counts", counts}};
    row["polynomial"] = ip.ok() ? poly_json(ip.poly) : Json(nullptr);
    row["signed_polynomial"] = signed_poly ? poly_json(*signed_poly) : Json(nullptr);
    out.results.push_back(row);

    Check ch{"degree " + l.to_string(), false, "", ""};
    if (ip.ok()) {
      const std::size_t deg = ip.poly.is_zero() ? 0 : ip.poly.degree();
      ch.pass = !ip.poly.is_zero() && deg == dim;
      ch.detail = ip.poly.to_string() + ", degree " + std::to_string(deg) + " vs dim " + std::to_string(dim);
    } else {
      ch.detail = "no nonnegative polynomial (" + ip.message + ")";
      if (signed_poly) {
        ch.detail += "; signed fit " + signed_poly->to_string() + " of degree " +
                     std::to_string(signed_poly->is_zero() ? 0 : signed_poly->degree()) +
                     " vs dim " + std::to_string(dim);
      }
    }
    if (!ch.pass) ch.reproduce = reproduce(o, "count", k, o.primes);
    out.checks.push_back(std::move(ch));
  }
}

std::vector<Subspace> parse_flag(const BilinearSpace& space, const std::string& text) {
  std::vector<Subspace> flag;
  if (text.empty()) return flag;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    std::string part = text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    auto rows = parse_rows(part);
    if (!rows.empty() && rows.front().size() != space.dim()) {
      throw InvalidArgument("flag rows must have " + std::to_string(space.dim()) + " entries");
    }
    MatrixF m(space.field(), rows, space.dim());
    if (m.rank() != rows.size()) throw InvalidArgument("flag member rows are linearly dependent");
    flag.push_back(rref_canonicalize(std::move(m)));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return flag;
}

std::string flag_text(const std::vector<Subspace>& flag) {
  std::string s;
  for (const auto& m : flag) {
    if (!s.empty()) s += "|";
    for (std::size_t r = 0; r < m.dim(); ++r) {
      if (r) s += ";";
      for (std::size_t c = 0; c < m.ambient_dim(); ++c) {
        if (c) s += ",";
        s += std::to_string(m.basis()(r, c));
      }
    }
  }
  return s;
}

// Exhaustive checks of one paving; pieces are appended to out.results when `emit` is set.
void paving_checks(const Options& o, const Options& repro_opts, const BilinearSpace& space,
                   std::size_t k, const std::vector<Subspace>& flag, const std::string& tag,
                   bool emit, ReportBundle& out) {
  const unsigned p = space.field().modulus();
  Paving pav = build_paving(space, k, flag);
  std::vector<std::uint64_t> hits(pav.pieces().size(), 0);
  bool constant = true;
  std::string bad;
  auto pts = isotropic_subspaces(space, k, budget_of(o));
  for (const auto& h : pts) {
    std::size_t id = pav.classify(h);
    ++hits[id];
    std::vector<std::size_t> inv;
    for (const auto& m : flag) inv.push_back(subspace_intersect(h, m).dim());
    if (inv != pav.pieces()[id].invariants) {
      constant = false;
      if (bad.empty()) bad = "piece " + pav.pieces()[id].path;
    }
  }
  bool sizes = true;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    std::uint64_t e = 1;
    for (std::size_t d = 0; d < pav.pieces()[i].affine_dim; ++d) e *= p;
    if (hits[i] != e) {
      sizes = false;
      if (bad.empty()) bad = "piece " + pav.pieces()[i].path + " has " + std::to_string(hits[i]);
    }
    if (emit) {
      out.results.push_back({{"kind", "paving_piece"},
                             {"prime", p},
                             {"id", pav.pieces()[i].id},
                             {"path", pav.pieces()[i].path},
                             {"affine_dim", pav.pieces()[i].affine_dim},
                             {"invariants", pav.pieces()[i].invariants},
                             {"count", hits[i]}});
    }
  }
  const std::uint64_t poly_at_p = to_u64(pav.polynomial().evaluate(p));
  if (emit) {
    out.results.push_back({{"kind", "paving"},
                           {"prime", p},
                           {"pieces", pav.pieces().size()},
                           {"polynomial", poly_json(pav.polynomial())},
                           {"brute_force_count", pts.size()}});
  }
  Check ch{"paving " + tag + " p=" + std::to_string(p), false, "", ""};
  ch.pass = sizes && constant && poly_at_p == pts.size();
  ch.detail = std::to_string(pav.pieces().size()) + " pieces, " + pav.polynomial().to_string() +
              " = " + std::to_string(pts.size()) + " points" + (bad.empty() ? "" : "; " + bad);
  if (!ch.pass) {
    const std::string extra = flag.empty() ? "" : " --flag " + shell_quote(flag_text(flag));
    ch.reproduce = reproduce(repro_opts, "paving", k, {p}, extra);
  }
  out.checks.push_back(std::move(ch));
}

void paving_suite(const Options& o, std::size_t k, ReportBundle& out) {
  std::set<std::pair<int, std::size_t>> seen;
  for (const auto& f : o.space.factors) {
    if (k > f.dim || !seen.insert({static_cast<int>(f.form), f.dim}).second) continue;
    Options single = o;
    single.space.factors = {f};
    for (unsigned p : o.primes) {
      BilinearSpace v = standard_space(f.form, f.dim, PrimeField(p));
      std::vector<std::vector<Subspace>> flags{{}};
      auto lines = isotropic_subspaces(v, 1, budget_of(o));
      if (!lines.empty()) {
        flags.push_back({lines.front()});
        for (const auto& plane : isotropic_subspaces(v, 2, budget_of(o))) {
          if (plane.contains(lines.front())) {
            flags.push_back({lines.front(), plane});
            break;
          }
        }
      }
      for (const auto& fl : flags) {
        std::string tag = single.space.to_string() + " k=" + std::to_string(k) + " flag=" +
                          std::to_string(fl.size());
        paving_checks(o, single, v, k, fl, tag, false, out);
      }
    }
  }
}

Json tower_json(const TowerDescriptor& t) {
  Json layers = Json::array();
  for (const auto& l : t.layers) {
    std::string family;
    switch (l.kind) {
      case TowerLayer::Kind::grassmannian: family = "Grassmannian"; break;
      case TowerLayer::Kind::iso_grassmannian: family = "IsoGrassmannian"; break;
      case TowerLayer::Kind::ruling: family = "component-of-max-isotropics"; break;
    }
    Json layer = {{"base", l.base}, {"family", family}, {"factor", l.factor},
                  {"ambient", l.ambient}, {"dim", l.dim}, {"count", poly_json(l.count)}};
    if (l.kind != TowerLayer::Kind::grassmannian) layer["form"] = to_string(l.form);
    layers.push_back(layer);
  }
  return layers;
}

void tower_checks(const Options& o, const MultiLabel& l, bool emit, ReportBundle& out) {
  TowerDescriptor t = x_tower(o.space.build(o.primes.front()), l);
  IntPolynomial total = t.total();
  Json counts = Json::object();
  const std::string extra = " --label " + shell_quote(l.to_string());
  for (unsigned p : o.primes) {
    std::uint64_t c = 0;
    for_each_x_point(o.space.build(p), l, [&](const FlagDatum&) { ++c; }, budget_of(o));
    counts[std::to_string(p)] = c;
    const std::uint64_t expect = to_u64(total.evaluate(p));
    Check ch{"tower " + l.to_string() + " p=" + std::to_string(p), c == expect,
             std::to_string(c) + " points vs " + total.to_string() + " = " + std::to_string(expect), ""};
    if (!ch.pass) ch.reproduce = reproduce(o, "resolve", std::nullopt, {p}, extra);
    out.checks.push_back(std::move(ch));
  }
  auto rep = coefficient_report(total);
  Check shape{"tower shape " + l.to_string(), rep.nonnegative && rep.palindromic,
              total.to_string() + (rep.palindromic ? " palindromic" : " not palindromic") +
                  (rep.nonnegative ? ", nonnegative" : ", has negative coefficients"),
              ""};
  if (!shape.pass) shape.reproduce = reproduce(o, "resolve", std::nullopt, o.primes, extra);
  out.checks.push_back(std::move(shape));
  if (emit) {
    out.results.push_back({{"kind", "tower"},
                           {"name", l.to_string()},
                           {"label", label_json(l)},
                           {"layers", tower_json(t)},
                           {"total", poly_json(total)},
                           {"x_points", counts}});
  }
}

void fiber_checks(const Options& o, const MultiLabel& l, bool emit, ReportBundle& out) {
  const std::string extra = " --label " + shell_quote(l.to_string());
  SumSpace s0 = o.space.build(o.primes.front());
  const std::size_t top = orbit_dim_multi(l);
  for (const auto& over : enumerate_omega(s0, l.k())) {
    std::vector<CountSample> samples;
    Json counts = Json::object();
    std::map<std::vector<std::size_t>, std::vector<CountSample>> groups;
    std::set<std::vector<std::size_t>> group_keys;
    std::vector<std::map<std::vector<std::size_t>, std::uint64_t>> per_prime;
    bool have_rep = true;
    for (unsigned p : o.primes) {
      SumSpace s = o.space.build(p);
      auto m = standard_representative(s, over, budget_of(o));
      if (!m) {
        have_rep = false;
        break;
      }
      MuFiber f = mu_fiber(s, l, *m, budget_of(o));
      samples.push_back({static_cast<std::int64_t>(p), static_cast<Int128>(f.points.size())});
      counts[std::to_string(p)] = f.points.size();
      per_prime.push_back(f.groups);
      for (const auto& [key, c] : f.groups) group_keys.insert(key);
      if (over == l) {
        Check ch{"open fiber " + l.to_string() + " p=" + std::to_string(p), f.points.size() == 1,
                 std::to_string(f.points.size()) + " point(s) over the open orbit", ""};
        if (!ch.pass) ch.reproduce = reproduce(o, "fibers", std::nullopt, {p}, extra);
        out.checks.push_back(std::move(ch));
      }
    }
    if (!have_rep) {
      out.checks.push_back({"fiber " + l.to_string() + " over " + over.to_string(), false,
                            "no standard representative for the stratum",
                            reproduce(o, "fibers", std::nullopt, o.primes, extra)});
      continue;
    }
    const std::size_t low = orbit_dim_multi(over);
    const std::size_t bound = top > low ? top - low : 0;
    Interpolation ip = interpolate_counts(samples, bound);
    // Each level set of the paving invariants is a union of pieces: its count
    // must itself be a nonnegative polynomial.
    bool groups_ok = true;
    for (const auto& key : group_keys) {
      std::vector<CountSample> gs;
      for (std::size_t i = 0; i < o.primes.size(); ++i) {
        auto it = per_prime[i].find(key);
        gs.push_back({static_cast<std::int64_t>(o.primes[i]),
                      static_cast<Int128>(it == per_prime[i].end() ? 0 : it->second)});
      }
      if (!interpolate_counts(gs, bound).ok()) groups_ok = false;
    }
    if (emit) {
      Json row = {{"kind", "fiber"},
                  {"tower", l.to_string()},
                  {"over", over.to_string()},
                  {"over_label", label_json(over)},
                  {"open", over == l},
                  {"counts", counts}};
      row["polynomial"] = ip.ok() ? poly_json(ip.poly) : Json(nullptr);
      row["invariant_groups"] = group_keys.size();
      out.results.push_back(row);
    }
    Check ch{"fiber " + l.to_string() + " over " + over.to_string(), ip.ok() && groups_ok, "", ""};
    ch.detail = ip.ok() ? "polynomial " + ip.poly.to_string() : "not polynomial: " + ip.message;
    if (!groups_ok) ch.detail += "; an invariant level set is not polynomial";
    if (!ch.pass) ch.reproduce = reproduce(o, "fibers", std::nullopt, o.primes, extra);
    out.checks.push_back(std::move(ch));
  }
  if (hat_factors(l).empty()) return;
  for (unsigned p : o.primes) {
    SumSpace s = o.space.build(p);
    auto m = split_open_representative(s, l, budget_of(o));
    Check ch{"hat fiber " + l.to_string() + " p=" + std::to_string(p), false, "", ""};
    if (!m) {
      ch.detail = "no open-orbit subspace with split quotients";
    } else {
      HatFiber h = muhat_fiber(s, l, *m, budget_of(o));
      ch.pass = h.ok;
      ch.detail = std::to_string(h.points.size()) + " points, " + std::to_string(h.components) +
                  " components vs 2^d = " + std::to_string(h.expected_components) +
                  (h.product_ok ? ", product structure holds" : ", product structure fails");
      if (emit) {
        Json factors = Json::array();
        for (const auto& fr : h.factors) {
          factors.push_back({{"factor", fr.factor}, {"odd", fr.odd}, {"quotient_dim", fr.quotient_dim},
                             {"split", fr.split}, {"distinct_q_tilde", fr.distinct_q_tilde},
                             {"expected", fr.expected}, {"rulings", fr.rulings}});
        }
        out.results.push_back({{"kind", "hat_fiber"},
                               {"tower", l.to_string()},
                               {"prime", p},
                               {"points", h.points.size()},
                               {"components", h.components},
                               {"expected_components", h.expected_components},
                               {"factors", factors}});
      }
    }
    if (!ch.pass) ch.reproduce = reproduce(o, "fibers", std::nullopt, {p}, extra);
    out.checks.push_back(std::move(ch));
  }
}

void closure_suite(const Options& o, std::size_t k, bool emit, ReportBundle& out) {
  const unsigned p = o.primes.front();
  SumSpace s = o.space.build(p);
  auto omega = enumerate_omega(s, k);
  const std::size_t c = omega.size();
  std::vector<std::vector<bool>> leq(c, std::vector<bool>(c, false));
  for (std::size_t j = 0; j < c; ++j) {
    auto cl = closure_labels(s, omega[j], budget_of(o));
    for (std::size_t i = 0; i < c; ++i) leq[i][j] = cl.count(omega[i]) > 0;
  }
  bool refl = true, anti = true, trans = true, chain = true;
  std::string witness;
  for (std::size_t i = 0; i < c; ++i) {
    if (!leq[i][i]) {
      refl = false;
      witness = omega[i].to_string();
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) {
        anti = false;
        witness = omega[i].to_string() + " ~ " + omega[j].to_string();
      }
      for (std::size_t t = 0; t < c; ++t) {
        if (leq[i][j] && leq[j][t] && !leq[i][t]) {
          trans = false;
          witness = omega[i].to_string() + " < " + omega[j].to_string() + " < " + omega[t].to_string();
        }
      }
    }
  }
  if (o.space.factors.size() == 1) {
    // closure of C_{k,r} is the union of the C_{k,r'} with r' <= r
    for (std::size_t j = 0; j < c; ++j) {
      const auto& rj = omega[j].parts[0].r;
      if (rj.is_special()) continue;
      for (std::size_t i = 0; i < c; ++i) {
        if (leq[i][j] != (omega[i].parts[0].r.numeric() <= rj.value)) {
          chain = false;
          witness = omega[i].to_string() + " vs " + omega[j].to_string();
        }
      }
    }
  }
  const std::string ks = " k=" + std::to_string(k);
  const std::string repro = reproduce(o, "closure", k, {p});
  auto add = [&](const std::string& name, bool pass) {
    out.checks.push_back({name + ks, pass, pass ? "" : witness, pass ? "" : repro});
  };
  add("closure reflexive", refl);
  add("closure antisymmetric", anti);
  add("closure transitive", trans);
  if (o.space.factors.size() == 1) add("closure chain", chain);
  if (emit) {
    Json nodes = Json::array(), edges = Json::array();
    for (const auto& l : omega) nodes.push_back({{"name", l.to_string()}, {"label", label_json(l)}});
    for (auto [a, b] : covering_edges(leq)) edges.push_back({a, b});
    out.results.push_back({{"kind", "poset"},
                           {"experimental", true},
                           {"prime", p},
                           {"k", k},
                           {"nodes", nodes},
                           {"edges", edges}});
  }
}

std::vector<std::size_t> all_k(const Options& o) {
  if (o.k) return {*o.k};
  std::vector<std::size_t> ks(o.space.dim() + 1);
  for (std::size_t i = 0; i < ks.size(); ++i) ks[i] = i;
  return ks;
}

ReportBundle start(const Options& o) {
  if (o.primes.empty()) throw InvalidArgument("--primes must list at least one prime");
  if (o.space.factors.empty()) throw InvalidArgument("--space is required");
  ReportBundle b;
  b.invocation = o.invocation();
  return b;
}

}  // namespace

Json Options::invocation() const {
  Json j;
  j["command"] = command;
  j["space"] = space.to_string();
  j["k"] = k ? Json(*k) : Json(nullptr);
  j["primes"] = primes;
  j["budget"] = budget;
  if (!label.empty()) j["label"] = label;
  if (!rows.empty()) j["rows"] = rows;
  if (!flag.empty()) j["flag"] = flag;
  if (command == "verify") j["suite"] = suite;
  if (counts) j["counts"] = true;
  return j;
}

std::vector<std::pair<std::size_t, std::size_t>> covering_edges(
    const std::vector<std::vector<bool>>& leq) {
  const std::size_t c = leq.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covered = true;
      for (std::size_t t = 0; t < c && covered; ++t) {
        if (t != i && t != j && leq[i][t] && leq[t][j]) covered = false;
      }
      if (covered) edges.emplace_back(i, j);
    }
  }
  return edges;
}

ReportBundle cmd_labels(const Options& o) {
  ReportBundle b = start(o);
  const std::size_t k = require_k(o);
  SumSpace s = o.space.build(o.primes.front());
  auto omega = enumerate_omega(s, k);
  std::map<unsigned, OrbitCensus> census;
  if (o.counts && k <= s.dim()) census = census_by_prime(o, k);
  for (const auto& l : omega) {
    Json row = catalog_row(l);
    if (o.counts) {
      Json counts = Json::object();
      for (const auto& [p, c] : census) {
        auto it = c.find(l);
        counts[std::to_string(p)] = it == c.end() ? 0 : it->second;
      }
      row["counts"] = counts;
    }
    b.results.push_back(row);
  }
  if (o.counts && k <= s.dim()) partition_checks(o, k, census, b);
  return b;
}

ReportBundle cmd_classify(const Options& o) {
  ReportBundle b = start(o);
  const unsigned p = o.primes.front();
  SumSpace s = o.space.build(p);
  auto rows = parse_rows(o.rows);
  if (rows.empty()) throw InvalidArgument("classify: --rows is required");
  if (rows.front().size() != s.dim()) {
    throw InvalidArgument("classify: rows need " + std::to_string(s.dim()) + " entries, got " +
                          std::to_string(rows.front().size()));
  }
  MatrixF m(s.field(), rows, s.dim());
  if (m.rank() != rows.size()) {
    throw InvalidArgument("classify: rows are linearly dependent over F_" + std::to_string(p) +
                          " (rank " + std::to_string(m.rank()) + " < " + std::to_string(rows.size()) + ")");
  }
  Subspace h = rref_canonicalize(std::move(m));
  MultiLabel l = multilabel_of(s, h);
  auto proj = block_projections(s, h);
  Json factors = Json::array();
  for (std::size_t i = 0; i < proj.size(); ++i) {
    const BilinearSpace& f = s.factor(i);
    Json row = {{"factor", i},
                {"form", to_string(f.form_type())},
                {"n", f.dim()},
                {"k", proj[i].dim()},
                {"radical_dim", radical(f, proj[i]).dim()},
                {"r", label_json(MultiLabel{{l.parts[i]}}).at("r").at(0)}};
    if (l.parts[i].r.is_special()) {
      row["witness_meet"] = subspace_intersect(proj[i], *f.split_witness()).dim();
      row["ruling"] = l.parts[i].r.to_string();
    }
    factors.push_back(row);
  }
  b.results.push_back({{"kind", "classification"},
                       {"prime", p},
                       {"name", l.to_string()},
                       {"label", label_json(l)},
                       {"dim", orbit_dim_multi(l)},
                       {"factors", factors}});
  return b;
}

ReportBundle cmd_count(const Options& o) {
  ReportBundle b = start(o);
  const std::size_t k = require_k(o);
  auto census = census_by_prime(o, k);
  partition_checks(o, k, census, b);
  degree_suite(o, k, census, b);
  return b;
}

ReportBundle cmd_paving(const Options& o) {
  ReportBundle b = start(o);
  const std::size_t k = require_k(o);
  if (o.space.factors.size() != 1) throw InvalidArgument("paving: --space must be a single factor");
  const auto& f = o.space.factors.front();
  for (unsigned p : o.primes) {
    BilinearSpace v = standard_space(f.form, f.dim, PrimeField(p));
    auto flag = parse_flag(v, o.flag);
    paving_checks(o, o, v, k, flag, o.space.to_string() + " k=" + std::to_string(k), true, b);
  }
  return b;
}

ReportBundle cmd_resolve(const Options& o) {
  ReportBundle b = start(o);
  MultiLabel l = require_label(o);
  tower_checks(o, l, true, b);
  return b;
}

ReportBundle cmd_fibers(const Options& o) {
  ReportBundle b = start(o);
  MultiLabel l = require_label(o);
  fiber_checks(o, l, true, b);
  return b;
}

ReportBundle cmd_closure(const Options& o) {
  ReportBundle b = start(o);
  closure_suite(o, require_k(o), true, b);
  return b;
}

ReportBundle cmd_verify(const Options& o) {
  static const std::set<std::string> suites{"partition", "degrees", "paving", "towers",
                                            "fibers",    "closure", "all"};
  if (!suites.count(o.suite)) throw InvalidArgument("verify: unknown suite '" + o.suite + "'");
  ReportBundle b = start(o);
  auto want = [&](const char* s) { return o.suite == "all" || o.suite == s; };
  for (std::size_t k : all_k(o)) {
    if (k > o.space.dim()) continue;
    if (want("partition") || want("degrees")) {
      auto census = census_by_prime(o, k);
      if (want("partition")) partition_checks(o, k, census, b);
      if (want("degrees")) degree_suite(o, k, census, b);
    }
    if (want("paving")) paving_suite(o, k, b);
    SumSpace s = o.space.build(o.primes.front());
    if (want("towers") || want("fibers")) {
      for (const auto& l : enumerate_omega(s, k)) {
        if (want("towers")) tower_checks(o, l, false, b);
        if (want("fibers")) fiber_checks(o, l, false, b);
      }
    }
    if (want("closure")) closure_suite(o, k, true, b);
  }
  return b;
}

ReportBundle run(const Options& o) {
  if (o.command == "labels") return cmd_labels(o);
  if (o.command == "classify") return cmd_classify(o);
  if (o.command == "count") return cmd_count(o);
  if (o.command == "paving") return cmd_paving(o);
  if (o.command == "resolve") return cmd_resolve(o);
  if (o.command == "fibers") return cmd_fibers(o);
  if (o.command == "closure") return cmd_closure(o);
  if (o.command == "verify") return cmd_verify(o);
  throw InvalidArgument("unknown command '" + o.command + "'");
}

}  // namespace strata::cli
