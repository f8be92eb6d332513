#include "strata/sum_space.hpp"

#include <algorithm>
#include <functional>

#include "strata/parallel.hpp"

namespace strata {

SumSpace::SumSpace(std::vector<BilinearSpace> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidArgument("SumSpace needs at least one factor");
  for (const auto& f : factors_) {
    if (f.dim() == 0) throw InvalidArgument("SumSpace factors must be nonzero");
    if (!(f.field() == factors_.front().field())) throw InvalidArgument("SumSpace: mixed fields");
    offsets_.push_back(total_);
    dims_.push_back(f.dim());
    total_ += f.dim();
  }
}

MatrixF SumSpace::block_gram() const {
  MatrixF g(field(), total_, total_);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const MatrixF& gi = factors_[i].gram();
    for (std::size_t r = 0; r < dims_[i]; ++r)
      for (std::size_t c = 0; c < dims_[i]; ++c) g(offsets_[i] + r, offsets_[i] + c) = gi(r, c);
  }
  return g;
}

std::string SumSpace::to_string() const {
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += "+";
    s += (f.is_symmetric() ? "O" : "Sp") + std::to_string(f.dim());
  }
  return s;
}

SumSpace standard_sum(const std::vector<FactorSpec>& factors, PrimeField field) {
  std::vector<BilinearSpace> spaces;
  for (const auto& f : factors) spaces.push_back(standard_space(f.form, f.dim, field));
  return SumSpace(std::move(spaces));
}

std::size_t MultiLabel::k() const {
  std::size_t k = 0;
  for (const auto& p : parts) k += p.k;
  return k;
}

std::string MultiLabel::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(parts[i].k) + "," + parts[i].r.to_string() + ")";
  }
  return s + ")";
}

bool is_valid(const SumSpace& space, const MultiLabel& label) {
  if (label.parts.size() != space.factor_count()) return false;
  for (std::size_t i = 0; i < label.parts.size(); ++i) {
    const auto& p = label.parts[i];
    if (p.n != space.factor(i).dim() || p.form != space.factor(i).form_type() || !is_valid(p)) {
      return false;
    }
  }
  return true;
}

std::vector<MultiLabel> enumerate_omega(const SumSpace& space, std::size_t k) {
  const std::size_t m = space.factor_count();
  std::vector<std::vector<std::size_t>> compositions;
  std::vector<std::size_t> comp(m, 0);
  std::function<void(std::size_t, std::size_t)> compose = [&](std::size_t i, std::size_t left) {
    if (i == m) {
      if (left == 0) compositions.push_back(comp);
      return;
    }
    for (std::size_t ki = 0; ki <= std::min(left, space.factor(i).dim()); ++ki) {
      comp[i] = ki;
      compose(i + 1, left - ki);
    }
  };
  compose(0, k);

  std::vector<MultiLabel> out;
  for (const auto& c : compositions) {
    std::vector<std::vector<SingleLabel>> choices;
    for (std::size_t i = 0; i < m; ++i) {
      choices.push_back(valid_labels(space.factor(i).form_type(), space.factor(i).dim(), c[i]));
    }
    MultiLabel cur;
    cur.parts.resize(m);
    std::function<void(std::size_t)> product = [&](std::size_t i) {
      if (i == m) {
        out.push_back(cur);
        return;
      }
      for (const auto& l : choices[i]) {
        cur.parts[i] = l;
        product(i + 1);
      }
    };
    product(0);
  }
  return out;
}

std::vector<Subspace> block_projections(const SumSpace& space, const Subspace& h) {
  const std::size_t n = space.dim();
  if (h.ambient_dim() != n) throw InvalidArgument("multilabel_of: ambient mismatch");
  // Echelon form from the right: each row's last nonzero entry is distinct,
  // so the rows ending in block i restrict to a basis of pr_i h.
  std::vector<std::size_t> rev(n);
  for (std::size_t j = 0; j < n; ++j) rev[j] = n - 1 - j;
  MatrixF red = h.basis().select_columns(rev);
  auto piv = red.rref_in_place();
  std::vector<MatrixF> rows;
  for (std::size_t i = 0; i < space.factor_count(); ++i) rows.emplace_back(space.field(), 0, space.factor(i).dim());
  std::vector<Scalar> buf;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    std::size_t last = n - 1 - piv[r];
    std::size_t i = space.factor_count() - 1;
    while (space.offset(i) > last) --i;
    const std::size_t off = space.offset(i), w = space.factor(i).dim();
    buf.assign(w, 0);
    for (std::size_t c = 0; c < w; ++c) buf[c] = red(r, n - 1 - (off + c));
    rows[i].append_row(buf);
  }
  std::vector<Subspace> out;
  for (auto& m : rows) out.push_back(rref_canonicalize(std::move(m)));
  return out;
}

MultiLabel multilabel_of(const SumSpace& space, const Subspace& h) {
  auto projections = block_projections(space, h);
  MultiLabel l;
  for (std::size_t i = 0; i < projections.size(); ++i) {
    l.parts.push_back(label_of(space.factor(i), projections[i]));
  }
  return l;
}

std::size_t bundle_rank(const MultiLabel& label) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < label.parts.size(); ++i)
    for (std::size_t j = i + 1; j < label.parts.size(); ++j)
      total += label.parts[j].k * (label.parts[i].n - label.parts[i].k);
  return total;
}

std::size_t orbit_dim_multi(const MultiLabel& label) {
  std::size_t total = bundle_rank(label);
  for (const auto& p : label.parts) total += orbit_dim(p);
  return total;
}

std::size_t component_exponent(const MultiLabel& label) {
  std::size_t d = 0;
  for (const auto& p : label.parts) d += component_group_order(p) == 2 ? 1 : 0;
  return d;
}

std::size_t component_group_order_multi(const MultiLabel& label) {
  return std::size_t{1} << component_exponent(label);
}

SliceWeightReport slice_weights(const MultiLabel& label, const std::vector<long long>& e) {
  const std::size_t m = label.parts.size();
  if (e.size() != m) throw InvalidArgument("slice_weights: need one exponent per factor");
  for (std::size_t i = 1; i < m; ++i) {
    if (e[i] <= e[i - 1]) throw InvalidArgument("slice_weights: exponents must strictly increase");
  }
  for (const auto& p : label.parts) require_valid(p);
  SliceWeightReport rep;
  auto add = [&](std::size_t i, std::size_t j, char block, long long w, std::size_t dim) {
    rep.blocks.push_back({i, j, block, w, dim});
    rep.total_dim += dim;
  };
  for (std::size_t i = 0; i < m; ++i) {
    const auto& pi = label.parts[i];
    const std::size_t ki = pi.k, ri = pi.r.numeric();
    for (std::size_t j = i; j < m; ++j) {
      const auto& pj = label.parts[j];
      const std::size_t kj = pj.k, rj = pj.r.numeric();
      const long long gap = e[j] - e[i];
      if (i == j) {
        const long long s = static_cast<long long>(ki - ri);
        const long long eps = pi.form == FormType::skew ? 1 : -1;
        add(i, j, 'c', 2, static_cast<std::size_t>(s * (s - eps) / 2));
        continue;
      }
      const std::size_t tail = pj.n - 2 * kj + rj;
      add(i, j, 'a', gap + 1, (ki - ri) * tail);
      add(i, j, 'b', gap, ri * tail);
      add(i, j, 'c', gap + 2, (ki - ri) * (kj - rj));
      add(i, j, 'd', gap + 1, ri * (kj - rj));
    }
  }
  rep.min_weight = rep.blocks.front().weight;
  for (const auto& b : rep.blocks) {
    rep.min_weight = std::min(rep.min_weight, b.weight);
    if (b.weight <= 0) rep.all_positive = false;
  }
  return rep;
}

OrbitCensus orbit_census(const SumSpace& space, std::size_t k, const EnumerationBudget& budget,
                         unsigned workers) {
  SubspaceEnumerator en(space.dim(), k, space.field(), budget);
  return parallel_reduce<OrbitCensus>(
      en.count(), workers, OrbitCensus{},
      [&](std::uint64_t b, std::uint64_t e) {
        OrbitCensus local;
        en.for_each(b, e, [&](const Subspace& h) { ++local[multilabel_of(space, h)]; });
        return local;
      },
      [](OrbitCensus acc, OrbitCensus part) {
        for (auto& [l, c] : part) acc[l] += c;
        return acc;
      });
}

std::uint64_t orbit_points_multi(const SumSpace& space, const MultiLabel& label,
                                 const EnumerationBudget& budget, unsigned workers) {
  if (!is_valid(space, label)) return 0;
  auto census = orbit_census(space, label.k(), budget, workers);
  auto it = census.find(label);
  return it == census.end() ? 0 : it->second;
}

std::uint64_t orbit_points_bundle(const SumSpace& space, const MultiLabel& label,
                                  const EnumerationBudget& budget, unsigned workers) {
  if (!is_valid(space, label)) return 0;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < label.parts.size(); ++i) {
    total *= stratum_points(space.factor(i), label.parts[i].k, label.parts[i].r, budget, workers);
  }
  for (std::size_t e = 0; e < bundle_rank(label); ++e) total *= space.field().modulus();
  return total;
}

}  // namespace strata
