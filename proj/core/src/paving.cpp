#include "strata/paving.hpp"

#include <algorithm>
#include <optional>

namespace strata {

namespace detail {

/// V/R for R inside the radical, realized on the non-pivot coordinates of R.
struct RadicalQuotient {
  BilinearSpace space;
  Subspace r;
  std::vector<std::size_t> kept;

  Subspace project(const Subspace& x) const {
    const PrimeField& f = r.field();
    MatrixF rows(f, 0, kept.size());
    std::vector<Scalar> v, out(kept.size());
    for (std::size_t i = 0; i < x.dim(); ++i) {
      v.assign(x.basis().row(i).begin(), x.basis().row(i).end());
      for (std::size_t j = 0; j < r.dim(); ++j) {
        Scalar c = v[r.pivots()[j]];
        if (c == 0) continue;
        auto rr = r.basis().row(j);
        for (std::size_t t = 0; t < v.size(); ++t) v[t] = f.sub(v[t], f.mul(c, rr[t]));
      }
      for (std::size_t t = 0; t < kept.size(); ++t) out[t] = v[kept[t]];
      rows.append_row(out);
    }
    return rref_canonicalize(std::move(rows));
  }
};

RadicalQuotient quotient_by(const BilinearSpace& space, const Subspace& r) {
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < space.dim(); ++c) {
    if (!std::binary_search(r.pivots().begin(), r.pivots().end(), c)) kept.push_back(c);
  }
  MatrixF g = space.gram().select_columns(kept).select_rows(kept);
  return {BilinearSpace(space.form_type(), std::move(g)), r, std::move(kept)};
}

bool is_isotropic_vector(const BilinearSpace& space, std::span<const Scalar> v) {
  return space.pair(v, v) == 0;
}

struct LocalPiece {
  std::size_t dim;
  std::vector<std::size_t> inv;
  std::string path;
};

struct PavingNode {
  enum class Kind { leaf, empty, degenerate, nondegenerate };
  Kind kind = Kind::empty;
  std::size_t k = 0;
  std::vector<Scalar> ell;
  std::optional<RadicalQuotient> quotient;  // degenerate case
  std::optional<Subspace> lperp;            // nondegenerate case
  std::size_t drop = 0;
  std::vector<Scalar> ell_coords;
  std::shared_ptr<const PavingNode> sub_km1, sub_k;
  std::size_t fib = 0;
  std::vector<LocalPiece> pieces;
  std::size_t n_x1 = 0, n_x2 = 0;

  /// Image in the child coordinates: V -> V/L (degenerate) or L^perp -> L^perp/L.
  Subspace project(const Subspace& x) const {
    if (kind == Kind::degenerate) return quotient->project(x);
    const PrimeField& f = x.field();
    const std::size_t m = lperp->dim();
    MatrixF rows(f, 0, m - 1);
    std::vector<Scalar> out(m - 1);
    Scalar scale = f.inv(ell_coords[drop]);
    for (std::size_t i = 0; i < x.dim(); ++i) {
      auto d = lperp->coordinates(x.basis().row(i));
      Scalar t = f.mul(d[drop], scale);
      std::size_t o = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == drop) continue;
        out[o++] = f.sub(d[j], f.mul(t, ell_coords[j]));
      }
      rows.append_row(out);
    }
    return rref_canonicalize(std::move(rows));
  }

  std::size_t classify(const Subspace& h) const {
    switch (kind) {
      case Kind::leaf: return 0;
      case Kind::empty: throw Error("internal: point classified into an empty paving node");
      case Kind::degenerate:
        if (h.contains(ell)) return sub_km1->classify(project(h));
        return n_x1 + sub_k->classify(project(h));
      case Kind::nondegenerate:
        if (h.contains(ell)) return sub_km1->classify(project(h));
        if (lperp->contains(h)) return n_x1 + sub_k->classify(project(h));
        return n_x1 + n_x2 + sub_km1->classify(project(subspace_intersect(h, *lperp)));
    }
    return 0;
  }
};

namespace {

std::string join(const char* branch, const std::string& rest) {
  return rest.empty() ? std::string(branch) : std::string(branch) + "." + rest;
}

std::shared_ptr<const PavingNode> build_node(const BilinearSpace& space, std::size_t k,
                                             const std::vector<Subspace>& flag) {
  auto node = std::make_shared<PavingNode>();
  node->k = k;
  const std::size_t n = space.dim();
  const std::size_t c = flag.size();
  if (k == 0) {
    node->kind = PavingNode::Kind::leaf;
    node->pieces.push_back({0, std::vector<std::size_t>(c, 0), ""});
    return node;
  }
  if (k > n) return node;

  const Subspace* first = nullptr;
  for (const auto& m : flag) {
    if (!m.is_zero()) {
      first = &m;
      break;
    }
  }
  std::vector<bool> nonzero;
  for (const auto& m : flag) nonzero.push_back(!m.is_zero());

  const PrimeField& f = space.field();
  std::vector<Subspace> child_flag;
  if (!space.is_nondegenerate()) {
    Subspace rad = perp(space, Subspace::full(f, n));
    Subspace pool = first ? subspace_intersect(rad, *first) : rad;
    if (pool.is_zero()) {
      throw InvalidArgument("build_paving: flag not adapted to the radical (first nonzero flag "
                            "member meets rad V trivially)");
    }
    node->kind = PavingNode::Kind::degenerate;
    node->ell.assign(pool.basis().row(0).begin(), pool.basis().row(0).end());
    MatrixF lrow(f, 0, n);
    lrow.append_row(node->ell);
    node->quotient = quotient_by(space, rref_canonicalize(lrow));
    for (const auto& m : flag) child_flag.push_back(node->quotient->project(m));
    const BilinearSpace& w = node->quotient->space;
    node->sub_km1 = build_node(w, k - 1, child_flag);
    node->sub_k = build_node(w, k, child_flag);
  } else {
    if (first) {
      node->ell.assign(first->basis().row(0).begin(), first->basis().row(0).end());
    } else {
      SubspaceEnumerator lines(n, 1, f);
      for (std::uint64_t i = 0; i < lines.count() && node->ell.empty(); ++i) {
        Subspace line = lines.at(i);
        if (is_isotropic_vector(space, line.basis().row(0))) {
          node->ell.assign(line.basis().row(0).begin(), line.basis().row(0).end());
        }
      }
      if (node->ell.empty()) return node;  // anisotropic: no isotropic k-spaces for k >= 1
    }
    node->kind = PavingNode::Kind::nondegenerate;
    MatrixF lrow(f, 0, n);
    lrow.append_row(node->ell);
    node->lperp = perp(space, rref_canonicalize(lrow));
    node->ell_coords = node->lperp->coordinates(node->ell);
    while (node->ell_coords[node->drop] == 0) ++node->drop;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < node->lperp->dim(); ++j)
      if (j != node->drop) keep.push_back(j);
    MatrixF wb = node->lperp->basis().select_rows(keep);
    BilinearSpace w(space.form_type(), pairing_matrix(wb, space.gram(), wb));
    for (const auto& m : flag) child_flag.push_back(node->project(m));
    if (2 * k <= n) node->fib = space.form_type() == FormType::skew ? n + 1 - 2 * k : n - 2 * k;
    node->sub_km1 = build_node(w, k - 1, child_flag);
    node->sub_k = build_node(w, k, child_flag);
  }

  for (const auto& p : node->sub_km1->pieces) {
    auto inv = p.inv;
    for (std::size_t i = 0; i < c; ++i) inv[i] += nonzero[i] ? 1 : 0;
    node->pieces.push_back({p.dim, std::move(inv), join("X1", p.path)});
  }
  node->n_x1 = node->pieces.size();
  for (const auto& p : node->sub_k->pieces) node->pieces.push_back({p.dim + k, p.inv, join("X2", p.path)});
  node->n_x2 = node->pieces.size() - node->n_x1;
  if (node->kind == PavingNode::Kind::nondegenerate && 2 * k <= n) {
    for (const auto& p : node->sub_km1->pieces) {
      node->pieces.push_back({p.dim + (k - 1) + node->fib, p.inv, join("X3", p.path)});
    }
  }
  return node;
}

}  // namespace
}  // namespace detail

Paving::Paving(const BilinearSpace& space, std::size_t k, std::vector<Subspace> flag)
    : space_(space), k_(k), flag_(std::move(flag)) {
  for (std::size_t i = 0; i < flag_.size(); ++i) {
    if (flag_[i].ambient_dim() != space.dim()) throw InvalidArgument("build_paving: flag ambient mismatch");
    if (!space.is_isotropic(flag_[i])) throw InvalidArgument("build_paving: flag member is not isotropic");
    if (i > 0 && !flag_[i].contains(flag_[i - 1])) throw InvalidArgument("build_paving: flag is not nested");
  }
  root_ = detail::build_node(space_, k_, flag_);
  for (std::size_t i = 0; i < root_->pieces.size(); ++i) {
    const auto& p = root_->pieces[i];
    pieces_.push_back({i, p.path, p.dim, p.inv});
  }
}

std::size_t Paving::classify(const Subspace& h) const {
  if (h.ambient_dim() != space_.dim() || h.dim() != k_) {
    throw InvalidArgument("classify_point: subspace has the wrong dimension");
  }
  if (!space_.is_isotropic(h)) throw InvalidArgument("classify_point: subspace is not isotropic");
  return root_->classify(h);
}

IntPolynomial Paving::polynomial() const {
  IntPolynomial poly;
  for (const auto& p : pieces_) poly += IntPolynomial::monomial(p.affine_dim);
  return poly;
}

std::vector<std::size_t> Paving::branch_sizes() const {
  std::vector<std::size_t> sizes(3, 0);
  for (const auto& p : pieces_) {
    if (p.path.rfind("X1", 0) == 0) ++sizes[0];
    else if (p.path.rfind("X2", 0) == 0) ++sizes[1];
    else if (p.path.rfind("X3", 0) == 0) ++sizes[2];
  }
  return sizes;
}

Paving build_paving(const BilinearSpace& space, std::size_t k, std::vector<Subspace> flag) {
  return Paving(space, k, std::move(flag));
}

std::size_t classify_point(const Paving& paving, const Subspace& h) { return paving.classify(h); }

IntPolynomial iso_count(FormType form, std::size_t n, std::size_t k) {
  // The recursion only depends on n, k and the form type, not on p.
  return build_paving(standard_space(form, n, PrimeField(3)), k).polynomial();
}

std::vector<Subspace> isotropic_subspaces(const BilinearSpace& space, std::size_t k,
                                          const EnumerationBudget& budget) {
  std::vector<Subspace> out;
  SubspaceEnumerator en(space.dim(), k, space.field(), budget);
  en.for_each([&](const Subspace& h) {
    if (space.is_isotropic(h)) out.push_back(h);
  });
  return out;
}

FiberedPartition fibered_partition_counts(const BilinearSpace& space,
                                          const std::vector<Subspace>& flag, std::size_t r,
                                          std::size_t k, const EnumerationBudget& budget) {
  const PrimeField& f = space.field();
  const std::size_t n = space.dim();
  Subspace rad = perp(space, Subspace::full(f, n));
  Subspace m1 = flag.empty() ? Subspace(f, n) : flag.front();
  Subspace base = subspace_intersect(m1, rad);

  FiberedPartition out;
  out.radical_dim = base.dim();
  if (r > base.dim() || r > k) {
    out.base_count = 0;
    return out;
  }
  SubspaceEnumerator bases(base.dim(), r, f, budget);
  out.base_count = bases.count();

  std::optional<std::vector<PavingPiece>> profile;
  Subspace full = Subspace::full(f, n);
  bases.for_each([&](const Subspace& coords) {
    Subspace rsub = rref_canonicalize(coords.basis() * base.basis());
    detail::RadicalQuotient q = detail::quotient_by(space, rsub);
    std::vector<Subspace> qflag;
    for (const auto& m : flag) qflag.push_back(q.project(m));
    Paving pav(q.space, k - r, qflag);
    if (!profile) {
      profile = pav.pieces();
      for (const auto& p : pav.pieces()) {
        out.pieces.push_back({p.id, p.affine_dim, p.invariants, 0, 0});
      }
    } else {
      const auto& cur = pav.pieces();
      bool same = cur.size() == profile->size();
      for (std::size_t i = 0; same && i < cur.size(); ++i) {
        same = cur[i].affine_dim == (*profile)[i].affine_dim &&
               cur[i].invariants == (*profile)[i].invariants;
      }
      if (!same) out.uniform_profile = false;
    }
    for_each_between(
        rsub, full, k,
        [&](const Subspace& h) {
          if (!space.is_isotropic(h)) return;
          std::size_t id = pav.classify(q.project(h));
          if (id < out.pieces.size()) ++out.pieces[id].count;
        },
        budget);
  });
  const std::uint64_t p = f.modulus();
  for (auto& piece : out.pieces) {
    std::uint64_t e = out.base_count;
    for (std::size_t i = 0; i < piece.affine_dim; ++i) e *= p;
    piece.expected = e;
    if (piece.count != piece.expected) out.ok = false;
  }
  if (!out.uniform_profile) out.ok = false;
  return out;
}

}  // namespace strata
