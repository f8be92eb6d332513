#include "strata/towers.hpp"

#include <algorithm>
#include <numeric>

#include "strata/paving.hpp"

namespace strata {

namespace {

// Columns [offset_i, offset_i + n_i) of s, plus the trailing extra column when
// s lives in B + F and `extended` is set.
Subspace block_columns(const SumSpace& space, const Subspace& s, std::size_t i, bool extended) {
  std::vector<std::size_t> cols(space.factor(i).dim());
  std::iota(cols.begin(), cols.end(), space.offset(i));
  if (extended) cols.push_back(s.ambient_dim() - 1);
  return rref_canonicalize(s.basis().select_columns(cols));
}

// B_{<i} + x, where x sits in B_i (or B_i + F, mapped to the last column).
Subspace lift(const SumSpace& space, std::size_t i, const Subspace& x, std::size_t ambient) {
  const std::size_t off = space.offset(i), ni = space.factor(i).dim();
  MatrixF rows(space.field(), 0, ambient);
  std::vector<Scalar> buf(ambient);
  for (std::size_t j = 0; j < off; ++j) {
    std::fill(buf.begin(), buf.end(), 0);
    buf[j] = 1;
    rows.append_row(buf);
  }
  for (std::size_t r = 0; r < x.dim(); ++r) {
    std::fill(buf.begin(), buf.end(), 0);
    for (std::size_t c = 0; c < ni; ++c) buf[off + c] = x.basis()(r, c);
    if (x.ambient_dim() == ni + 1) buf[ambient - 1] = x.basis()(r, ni);
    rows.append_row(buf);
  }
  return rref_canonicalize(std::move(rows));
}

std::vector<std::size_t> prefix_k(const MultiLabel& label) {
  std::vector<std::size_t> kk(label.parts.size() + 1, 0);
  for (std::size_t i = 0; i < label.parts.size(); ++i) kk[i + 1] = kk[i] + label.parts[i].k;
  return kk;
}

std::size_t tilde_dim(const SingleLabel& l) { return l.k - l.r.numeric(); }

// Candidate P~_i: isotropic of dim k_i - r_i, on the requested ruling if r_i is special.
bool admissible_tilde(const BilinearSpace& factor, const SingleLabel& l, const Subspace& pt) {
  if (pt.dim() != tilde_dim(l) || !factor.is_isotropic(pt)) return false;
  if (l.r.is_special()) return label_of(factor, pt).r == l.r;
  return true;
}

void require_label(const SumSpace& space, const MultiLabel& label) {
  if (!is_valid(space, label)) {
    throw InvalidArgument("label " + label.to_string() + " is not valid for " + space.to_string());
  }
}

bool is_power_of(std::uint64_t v, std::uint64_t p) {
  if (v == 0) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

std::size_t hat_tilde_dim(const SingleLabel& l) {
  const std::size_t r = l.r.numeric();
  return r % 2 == 0 ? l.k - r / 2 : l.k - (r - 1) / 2;
}

// Gram matrix of x / rad x.
MatrixF quotient_gram(const BilinearSpace& s, const Subspace& x) {
  Subspace rad = radical(s, x);
  MatrixF c = complement_rows(rad, x);
  return pairing_matrix(c, s.gram(), c);
}

bool split_even(const PrimeField& f, const MatrixF& gram) {
  const std::size_t d = gram.rows();
  if (d % 2 != 0) return false;
  if (d == 0) return true;
  Scalar disc = gram.determinant();
  if ((d / 2) % 2 == 1) disc = f.neg(disc);
  return f.is_square(disc);
}

}  // namespace

bool is_flag_datum(const SumSpace& space, const MultiLabel& label, const FlagDatum& d) {
  const std::size_t m = space.factor_count(), n = space.dim();
  if (!is_valid(space, label)) return false;
  if (d.p_tilde.size() != m || d.p.size() != m || d.h.size() != m) return false;
  auto kk = prefix_k(label);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& l = label.parts[i];
    const BilinearSpace& bi = space.factor(i);
    const Subspace &pt = d.p_tilde[i], &p = d.p[i], &h = d.h[i];
    if (pt.ambient_dim() != bi.dim() || p.ambient_dim() != n || h.ambient_dim() != n) return false;
    if (!admissible_tilde(bi, l, pt)) return false;
    if (p.dim() != kk[i] + tilde_dim(l) || h.dim() != kk[i + 1]) return false;
    const std::size_t upto = space.offset(i) + bi.dim();
    if (prefix_intersect(p, upto).dim() != p.dim() || prefix_intersect(h, upto).dim() != h.dim()) {
      return false;
    }
    if (!pt.contains(block_columns(space, p, i, false))) return false;
    if (!perp(bi, pt).contains(block_columns(space, h, i, false))) return false;
    if (!h.contains(p)) return false;
    if (i > 0 && !p.contains(d.h[i - 1])) return false;
  }
  return true;
}

std::string TowerLayer::to_string() const {
  std::string fam;
  switch (kind) {
    case Kind::grassmannian:
      fam = "Gr(" + std::to_string(dim) + "," + std::to_string(ambient) + ")";
      break;
    case Kind::iso_grassmannian:
      fam = "IsoGr(" + strata::to_string(form) + "," + std::to_string(dim) + "," +
            std::to_string(ambient) + ")";
      break;
    case Kind::ruling:
      fam = "Ruling(" + std::to_string(dim) + "," + std::to_string(ambient) + ")";
      break;
  }
  return base + ": " + fam + " -> " + count.to_string();
}

IntPolynomial TowerDescriptor::total() const {
  IntPolynomial t = IntPolynomial::constant(1);
  for (const auto& l : layers) t = t * l.count;
  return t;
}

TowerDescriptor x_tower(const SumSpace& space, const MultiLabel& label) {
  require_label(space, label);
  const std::size_t m = space.factor_count();
  auto kk = prefix_k(label);
  TowerDescriptor t;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& l = label.parts[i];
    const BilinearSpace& bi = space.factor(i);
    TowerLayer layer{"Y1", TowerLayer::Kind::iso_grassmannian, bi.form_type(), i, bi.dim(),
                     tilde_dim(l), iso_count(bi.form_type(), bi.dim(), tilde_dim(l))};
    if (l.r.is_special()) {
      layer.kind = TowerLayer::Kind::ruling;
      std::vector<Int128> half;
      for (Int128 c : layer.count.coefficients()) half.push_back(c / 2);
      layer.count = IntPolynomial(std::move(half));
    }
    t.layers.push_back(std::move(layer));
  }
  std::size_t before = 0;  // n_{<j}
  for (std::size_t j = 0; j < m; ++j) {
    const auto& l = label.parts[j];
    const std::size_t a = tilde_dim(l), nj = space.factor(j).dim();
    // P_j / H_{j-1} inside (B_{<j} + P~_j) / H_{j-1}
    const std::size_t pa = before + a - kk[j];
    t.layers.push_back({"Y'" + std::to_string(j + 1), TowerLayer::Kind::grassmannian,
                        FormType::symmetric, j, pa, a, gaussian_binomial(pa, a)});
    // H_j / P_j inside (B_{<j} + P~_j^perp) / P_j
    const std::size_t ha = before + nj - 2 * a - kk[j];
    const std::size_t r = l.r.numeric();
    t.layers.push_back({"Y" + std::to_string(j + 2), TowerLayer::Kind::grassmannian,
                        FormType::symmetric, j, ha, r, gaussian_binomial(ha, r)});
    before += nj;
  }
  return t;
}

void for_each_x_point(const SumSpace& space, const MultiLabel& label,
                      const std::function<void(const FlagDatum&)>& visit,
                      const EnumerationBudget& budget) {
  require_label(space, label);
  const std::size_t m = space.factor_count(), n = space.dim();
  const auto p = space.field().modulus();
  budget.require(static_cast<long double>(x_tower(space, label).total().evaluate(p)),
                 "x_points " + label.to_string());
  auto kk = prefix_k(label);

  std::vector<std::vector<Subspace>> tildes(m);
  for (std::size_t i = 0; i < m; ++i) {
    const BilinearSpace& bi = space.factor(i);
    for (auto& s : isotropic_subspaces(bi, tilde_dim(label.parts[i]), budget)) {
      if (admissible_tilde(bi, label.parts[i], s)) tildes[i].push_back(std::move(s));
    }
  }

  FlagDatum cur;
  cur.p_tilde.assign(m, Subspace(space.field(), 0));
  cur.p.assign(m, Subspace(space.field(), n));
  cur.h.assign(m, Subspace(space.field(), n));
  std::function<void(std::size_t, const Subspace&)> step = [&](std::size_t j, const Subspace& hprev) {
    if (j == m) {
      visit(cur);
      return;
    }
    const BilinearSpace& bj = space.factor(j);
    const std::size_t pdim = kk[j] + tilde_dim(label.parts[j]);
    for (const auto& pt : tildes[j]) {
      cur.p_tilde[j] = pt;
      Subspace p_top = lift(space, j, pt, n);
      Subspace h_top = lift(space, j, perp(bj, pt), n);
      for_each_between(hprev, p_top, pdim, [&](const Subspace& pj) {
        cur.p[j] = pj;
        for_each_between(pj, h_top, kk[j + 1], [&](const Subspace& hj) {
          cur.h[j] = hj;
          step(j + 1, hj);
        }, budget);
      }, budget);
    }
  };
  step(0, Subspace(space.field(), n));
}

std::vector<FlagDatum> x_points(const SumSpace& space, const MultiLabel& label,
                                const EnumerationBudget& budget) {
  std::vector<FlagDatum> out;
  for_each_x_point(space, label, [&](const FlagDatum& d) { out.push_back(d); }, budget);
  return out;
}

const Subspace& mu(const FlagDatum& d) {
  if (d.h.empty()) throw InvalidArgument("mu: empty datum");
  return d.h.back();
}

namespace {

// Top-down enumeration of mu^{-1}(m): H_m = m, then P~_j, P_j, H_{j-1} for j = m..1.
void for_each_fiber_point(const SumSpace& space, const MultiLabel& label, const Subspace& msub,
                          const std::function<void(const FlagDatum&)>& visit,
                          const EnumerationBudget& budget) {
  require_label(space, label);
  const std::size_t m = space.factor_count(), n = space.dim();
  if (msub.ambient_dim() != n) throw InvalidArgument("mu_fiber: ambient mismatch");
  auto kk = prefix_k(label);
  if (msub.dim() != kk[m]) return;
  FlagDatum cur;
  cur.p_tilde.assign(m, Subspace(space.field(), 0));
  cur.p.assign(m, Subspace(space.field(), n));
  cur.h.assign(m, Subspace(space.field(), n));
  const Subspace zero(space.field(), n);
  std::function<void(std::size_t)> step = [&](std::size_t jj) {
    if (jj == 0) {
      visit(cur);
      return;
    }
    const std::size_t j = jj - 1;
    const BilinearSpace& bj = space.factor(j);
    const auto& l = label.parts[j];
    const Subspace& hj = cur.h[j];
    Subspace room = perp(bj, block_columns(space, hj, j, false));
    for_each_between(Subspace(space.field(), bj.dim()), room, tilde_dim(l), [&](const Subspace& pt) {
      if (!admissible_tilde(bj, l, pt)) return;
      cur.p_tilde[j] = pt;
      Subspace top = subspace_intersect(hj, lift(space, j, pt, n));
      for_each_between(zero, top, kk[j] + tilde_dim(l), [&](const Subspace& pj) {
        cur.p[j] = pj;
        if (j == 0) {
          step(0);
          return;
        }
        Subspace inner = prefix_intersect(pj, space.offset(j));
        for_each_between(zero, inner, kk[j], [&](const Subspace& hprev) {
          cur.h[j - 1] = hprev;
          step(j);
        }, budget);
      }, budget);
    }, budget);
  };
  cur.h[m - 1] = msub;
  step(m);
}

}  // namespace

MuFiber mu_fiber(const SumSpace& space, const MultiLabel& label, const Subspace& m,
                 const EnumerationBudget& budget) {
  MuFiber f;
  f.m_label = multilabel_of(space, m);
  f.open = f.m_label == label;
  const std::size_t n = space.dim();
  auto proj = block_projections(space, m);
  std::vector<Subspace> rad_plus;
  for (std::size_t i = 0; i < space.factor_count(); ++i) {
    rad_plus.push_back(lift(space, i, radical(space.factor(i), proj[i]), n));
  }
  for_each_fiber_point(space, label, m, [&](const FlagDatum& d) {
    FiberPoint pt{d, {}};
    for (std::size_t i = 0; i < space.factor_count(); ++i) {
      const std::size_t off = space.offset(i);
      pt.invariants.push_back(prefix_intersect(d.p[i], off).dim());
      pt.invariants.push_back(prefix_intersect(d.h[i], off).dim());
      pt.invariants.push_back(subspace_intersect(d.p[i], rad_plus[i]).dim());
    }
    ++f.groups[pt.invariants];
    f.points.push_back(std::move(pt));
  }, budget);
  for (const auto& [inv, c] : f.groups) {
    if (!is_power_of(c, space.field().modulus())) f.groups_are_powers = false;
  }
  if (f.open) f.open_ok = f.points.size() == 1;
  return f;
}

std::uint64_t mu_fiber_size(const SumSpace& space, const MultiLabel& label, const Subspace& m,
                            const EnumerationBudget& budget) {
  std::uint64_t c = 0;
  for_each_fiber_point(space, label, m, [&](const FlagDatum&) { ++c; }, budget);
  return c;
}

std::set<MultiLabel> closure_labels(const SumSpace& space, const MultiLabel& label,
                                    const EnumerationBudget& budget) {
  std::set<Subspace> image;
  for_each_x_point(space, label, [&](const FlagDatum& d) { image.insert(mu(d)); }, budget);
  std::set<MultiLabel> out;
  for (const auto& h : image) out.insert(multilabel_of(space, h));
  return out;
}

std::optional<Subspace> orbit_representative(const SumSpace& space, const MultiLabel& label,
                                             const EnumerationBudget& budget) {
  require_label(space, label);
  SubspaceEnumerator en(space.dim(), label.k(), space.field(), budget);
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    Subspace h = en.at(i);
    if (multilabel_of(space, h) == label) return h;
  }
  return std::nullopt;
}

SingleResolution single_resolution(const BilinearSpace& space, std::size_t k, std::size_t r,
                                   const EnumerationBudget& budget) {
  const std::size_t n = space.dim();
  const std::size_t lo = 2 * k > n ? 2 * k - n : 0;
  if (k > n || r < lo || r > k) {
    throw InvalidArgument("single_resolution: need max(0, 2k-n) <= r <= k");
  }
  SingleResolution res;
  std::map<Subspace, std::uint64_t> preimages;
  for (const auto& p : isotropic_subspaces(space, k - r, budget)) {
    for_each_between(p, perp(space, p), k, [&](const Subspace& h) {
      res.pairs.emplace_back(p, h);
      ++preimages[h];
    }, budget);
  }
  res.image_size = preimages.size();
  res.image_ok = true;
  for (const auto& [h, c] : preimages) {
    if (radical(space, h).dim() < k - r) res.image_ok = false;
  }
  res.injective_ok = true;
  SubspaceEnumerator en(n, k, space.field(), budget);
  en.for_each([&](const Subspace& h) {
    const std::size_t rd = radical(space, h).dim();
    if (rd < k - r) return;
    ++res.expected_image_size;
    auto it = preimages.find(h);
    if (rd == k - r && (it == preimages.end() || it->second != 1)) res.injective_ok = false;
  });
  if (res.image_size != res.expected_image_size) res.image_ok = false;
  return res;
}

std::vector<std::size_t> hat_factors(const MultiLabel& label) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < label.parts.size(); ++i) {
    if (component_group_order(label.parts[i]) == 2) out.push_back(i);
  }
  return out;
}

BilinearSpace extended_factor(const BilinearSpace& factor) {
  if (!factor.is_symmetric()) throw InvalidArgument("extended_factor: symmetric form required");
  const std::size_t n = factor.dim();
  MatrixF g(factor.field(), n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g(r, c) = factor.gram()(r, c);
  g(n, n) = 1;
  return BilinearSpace(FormType::symmetric, std::move(g));
}

namespace {

// All (Q~_i, Q_i) choices over x for one hat factor.
std::vector<HatExtra> hat_choices(const SumSpace& space, const MultiLabel& label,
                                  const FlagDatum& x, std::size_t i,
                                  const EnumerationBudget& budget) {
  const auto& l = label.parts[i];
  const bool odd = l.r.numeric() % 2 == 1;
  const std::size_t n = space.dim();
  const std::size_t qt_dim = hat_tilde_dim(l);
  const std::size_t q_dim = prefix_k(label)[i] + qt_dim;
  std::vector<HatExtra> out;
  if (!odd) {
    const BilinearSpace& bi = space.factor(i);
    for_each_between(x.p_tilde[i], perp(bi, x.p_tilde[i]), qt_dim, [&](const Subspace& qt) {
      if (!bi.is_isotropic(qt)) return;
      Subspace top = subspace_intersect(x.h[i], lift(space, i, qt, n));
      for_each_between(x.p[i], top, q_dim, [&](const Subspace& q) {
        out.push_back({i, false, qt, q});
      }, budget);
    }, budget);
    return out;
  }
  BilinearSpace ext = extended_factor(space.factor(i));
  Subspace pt = embed(x.p_tilde[i], ext.dim(), 0);
  Subspace p_plus = embed(x.p[i], n + 1, 0);
  Subspace h_plus = direct_sum(x.h[i], Subspace::full(space.field(), 1));
  for_each_between(pt, perp(ext, pt), qt_dim, [&](const Subspace& qt) {
    if (!ext.is_isotropic(qt)) return;
    Subspace top = subspace_intersect(h_plus, lift(space, i, qt, n + 1));
    for_each_between(p_plus, top, q_dim, [&](const Subspace& q) {
      out.push_back({i, true, qt, q});
    }, budget);
  }, budget);
  return out;
}

}  // namespace

void for_each_hat_extension(const SumSpace& space, const MultiLabel& label, const FlagDatum& x,
                            const std::function<void(const HatDatum&)>& visit,
                            const EnumerationBudget& budget) {
  auto idx = hat_factors(label);
  std::vector<std::vector<HatExtra>> choices;
  for (std::size_t i : idx) {
    choices.push_back(hat_choices(space, label, x, i, budget));
    if (choices.back().empty()) return;
  }
  HatDatum cur{x, {}};
  std::function<void(std::size_t)> product = [&](std::size_t t) {
    if (t == choices.size()) {
      visit(cur);
      return;
    }
    for (const auto& c : choices[t]) {
      cur.extra.push_back(c);
      product(t + 1);
      cur.extra.pop_back();
    }
  };
  product(0);
}

std::vector<HatDatum> xhat_points(const SumSpace& space, const MultiLabel& label,
                                  const EnumerationBudget& budget) {
  std::vector<HatDatum> out;
  for_each_x_point(space, label, [&](const FlagDatum& x) {
    for_each_hat_extension(space, label, x, [&](const HatDatum& d) { out.push_back(d); }, budget);
  }, budget);
  return out;
}

namespace {

// N_i for an open-orbit M: pr_i M (or pr_i M + F) as a subspace of B_i (or B_i + F).
Subspace hat_quotient_source(const SumSpace& space, const MultiLabel& label, const Subspace& proj,
                             std::size_t i) {
  if (label.parts[i].r.numeric() % 2 == 0) return proj;
  return direct_sum(proj, Subspace::full(space.field(), 1));
}

BilinearSpace hat_ambient(const SumSpace& space, const MultiLabel& label, std::size_t i) {
  if (label.parts[i].r.numeric() % 2 == 0) return space.factor(i);
  return extended_factor(space.factor(i));
}

}  // namespace

HatFiber muhat_fiber(const SumSpace& space, const MultiLabel& label, const Subspace& m,
                     const EnumerationBudget& budget) {
  HatFiber f;
  f.m_label = multilabel_of(space, m);
  f.open = f.m_label == label;
  for_each_fiber_point(space, label, m, [&](const FlagDatum& x) {
    for_each_hat_extension(space, label, x, [&](const HatDatum& d) { f.points.push_back(d); },
                           budget);
  }, budget);
  f.expected_components = component_group_order_multi(label);
  if (!f.open) return f;

  auto idx = hat_factors(label);
  auto proj = block_projections(space, m);
  std::uint64_t product = 1;
  std::set<std::vector<int>> classes;
  std::vector<std::vector<int>> per_point(f.points.size());
  f.product_ok = true;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    const std::size_t i = idx[t];
    BilinearSpace amb = hat_ambient(space, label, i);
    Subspace src = hat_quotient_source(space, label, proj[i], i);
    MatrixF qg = quotient_gram(amb, src);
    HatFactorReport rep{i, label.parts[i].r.numeric() % 2 == 1, qg.rows(),
                        split_even(space.field(), qg), 0, 0, 0};
    if (qg.rows() > 0) {
      BilinearSpace nq(FormType::symmetric, qg);
      rep.expected = isotropic_subspaces(nq, qg.rows() / 2, budget).size();
    } else {
      rep.expected = 1;
    }
    std::set<Subspace> distinct;
    for (const auto& d : f.points) distinct.insert(d.extra[t].q_tilde);
    rep.distinct_q_tilde = distinct.size();
    // Two maximal isotropics lie on the same ruling iff their meet has the
    // parity of their dimension (all dims taken modulo the common P~_i).
    std::set<int> rulings;
    if (!f.points.empty()) {
      const Subspace& ref = f.points.front().extra[t].q_tilde;
      const std::size_t base = f.points.front().base.p_tilde[i].dim();
      for (std::size_t s = 0; s < f.points.size(); ++s) {
        const Subspace& qt = f.points[s].extra[t].q_tilde;
        const std::size_t meet = subspace_intersect(qt, ref).dim() - base;
        const int cls = static_cast<int>((meet + qt.dim() - base) % 2);
        per_point[s].push_back(cls);
        rulings.insert(cls);
      }
    }
    rep.rulings = rulings.size();
    if (rep.distinct_q_tilde != rep.expected) f.product_ok = false;
    product *= rep.expected;
    f.factors.push_back(rep);
  }
  for (const auto& v : per_point) classes.insert(v);
  if (f.points.size() != product) f.product_ok = false;
  f.components = f.points.empty() ? 0 : classes.size();
  f.ok = f.product_ok && f.components == f.expected_components;
  return f;
}

namespace {

std::optional<Subspace> first_matching(const SumSpace& space, const MultiLabel& label,
                                       const EnumerationBudget& budget,
                                       const std::function<bool(const std::vector<Subspace>&)>& keep) {
  require_label(space, label);
  SubspaceEnumerator en(space.dim(), label.k(), space.field(), budget);
  for (std::uint64_t s = 0; s < en.count(); ++s) {
    Subspace h = en.at(s);
    if (multilabel_of(space, h) == label && keep(block_projections(space, h))) return h;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Subspace> standard_representative(const SumSpace& space, const MultiLabel& label,
                                                const EnumerationBudget& budget) {
  const PrimeField& f = space.field();
  return first_matching(space, label, budget, [&](const std::vector<Subspace>& proj) {
    for (std::size_t i = 0; i < proj.size(); ++i) {
      if (!space.factor(i).is_symmetric()) continue;
      MatrixF qg = quotient_gram(space.factor(i), proj[i]);
      const std::size_t r = qg.rows();
      if (r == 0) continue;
      // the antidiagonal form of size r has determinant (-1)^{r(r-1)/2}
      Scalar disc = qg.determinant();
      if ((r * (r - 1) / 2) % 2 == 1) disc = f.neg(disc);
      if (!f.is_square(disc)) return false;
    }
    return true;
  });
}

std::optional<Subspace> split_open_representative(const SumSpace& space, const MultiLabel& label,
                                                  const EnumerationBudget& budget) {
  auto idx = hat_factors(label);
  return first_matching(space, label, budget, [&](const std::vector<Subspace>& proj) {
    for (std::size_t i : idx) {
      MatrixF qg = quotient_gram(hat_ambient(space, label, i),
                                 hat_quotient_source(space, label, proj[i], i));
      if (!split_even(space.field(), qg)) return false;
    }
    return true;
  });
}

}  // namespace strata
