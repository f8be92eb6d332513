#include "strata/orbit_catalog.hpp"

#include <algorithm>

#include "strata/parallel.hpp"

namespace strata {

std::string RankSymbol::to_string() const {
  switch (kind) {
    case Kind::prime0: return "0'";
    case Kind::doubleprime0: return "0''";
    case Kind::integer: break;
  }
  return std::to_string(value);
}

std::string SingleLabel::to_string() const {
  return "(k=" + std::to_string(k) + ", r=" + r.to_string() + ")";
}

bool is_valid(const SingleLabel& l) {
  if (l.k > l.n) return false;
  const std::size_t lo = 2 * l.k > l.n ? 2 * l.k - l.n : 0;
  const bool maximal = l.form == FormType::symmetric && l.n == 2 * l.k;
  if (l.r.is_special()) return maximal && l.k >= 1;
  const std::size_t r = l.r.value;
  if (r < lo || r > l.k) return false;
  if (l.form == FormType::skew) return l.n % 2 == 0 && r % 2 == 0;
  // Integer r = 0 is split into 0' and 0'' exactly when n = 2k.
  if (maximal && r == 0) return false;
  return true;
}

void require_valid(const SingleLabel& label) {
  if (!is_valid(label)) {
    throw InvalidArgument("invalid label " + label.to_string() + " for " + to_string(label.form) +
                          " space of dimension " + std::to_string(label.n));
  }
}

std::vector<SingleLabel> valid_labels(FormType form, std::size_t n, std::size_t k) {
  std::vector<SingleLabel> out;
  if (k > n) return out;
  for (RankSymbol r : {RankSymbol::prime0(), RankSymbol::doubleprime0()}) {
    SingleLabel l{form, n, k, r};
    if (is_valid(l)) out.push_back(l);
  }
  for (std::size_t r = 0; r <= k; ++r) {
    SingleLabel l{form, n, k, RankSymbol::integer(r)};
    if (is_valid(l)) out.push_back(l);
  }
  return out;
}

SingleLabel label_of(const BilinearSpace& space, const Subspace& h) {
  if (!space.is_nondegenerate()) throw InvalidArgument("label_of: ambient form is degenerate");
  if (h.ambient_dim() != space.dim()) throw InvalidArgument("label_of: ambient mismatch");
  const std::size_t k = h.dim();
  const std::size_t r = r_invariant(space, h);
  SingleLabel l{space.form_type(), space.dim(), k, RankSymbol::integer(r)};
  if (space.is_symmetric() && space.dim() == 2 * k && r == 0 && k > 0) {
    if (!space.split_witness()) throw InvalidArgument("label_of: split witness required");
    std::size_t meet = subspace_intersect(h, *space.split_witness()).dim();
    l.r = meet % 2 == k % 2 ? RankSymbol::prime0() : RankSymbol::doubleprime0();
  }
  return l;
}

std::size_t orbit_dim(const SingleLabel& label) {
  require_valid(label);
  const long long n = static_cast<long long>(label.n);
  const long long k = static_cast<long long>(label.k);
  const long long r = static_cast<long long>(label.r.numeric());
  const long long eps = label.form == FormType::skew ? 1 : -1;
  long long d = k * (n - 2 * k + r) + r * (k - r) + (k - r) * (k - r + eps) / 2;
  return static_cast<std::size_t>(d);
}

std::size_t component_group_order(const SingleLabel& label) {
  require_valid(label);
  if (label.form != FormType::symmetric || label.r.is_special()) return 1;
  const std::size_t lo = 2 * label.k > label.n ? 2 * label.k - label.n : 0;
  return lo < label.r.value ? 2 : 1;
}

OrbitRecord orbit_record(const SingleLabel& label) {
  return {label, orbit_dim(label), component_group_order(label)};
}

std::map<RankSymbol, std::uint64_t> stratum_census(const BilinearSpace& space, std::size_t k,
                                                   const EnumerationBudget& budget,
                                                   unsigned workers) {
  using Census = std::map<RankSymbol, std::uint64_t>;
  SubspaceEnumerator en(space.dim(), k, space.field(), budget);
  return parallel_reduce<Census>(
      en.count(), workers, Census{},
      [&](std::uint64_t b, std::uint64_t e) {
        Census local;
        en.for_each(b, e, [&](const Subspace& h) { ++local[label_of(space, h).r]; });
        return local;
      },
      [](Census acc, Census part) {
        for (auto& [r, c] : part) acc[r] += c;
        return acc;
      });
}

std::uint64_t stratum_points(const BilinearSpace& space, std::size_t k, RankSymbol r,
                             const EnumerationBudget& budget, unsigned workers) {
  auto census = stratum_census(space, k, budget, workers);
  auto it = census.find(r);
  return it == census.end() ? 0 : it->second;
}

}  // namespace strata
