#include "strata/bilinear.hpp"

#include <string>
#include <vector>

#include "strata/errors.hpp"

namespace strata {

std::string to_string(FormType t) { return t == FormType::symmetric ? "symmetric" : "skew"; }

BilinearSpace::BilinearSpace(FormType type, MatrixF gram, std::optional<Subspace> split_witness)
    : type_(type), gram_(std::move(gram)), witness_(std::move(split_witness)) {
  const std::size_t n = gram_.rows();
  if (gram_.cols() != n) throw InvalidArgument("Gram matrix must be square");
  const PrimeField& f = gram_.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar expect = type_ == FormType::symmetric ? gram_(j, i) : f.neg(gram_(j, i));
      if (gram_(i, j) != expect) throw InvalidArgument("Gram matrix is not " + to_string(type_));
    }
  }
  nondegenerate_ = gram_.rank() == n;
  if (witness_) {
    if (witness_->ambient_dim() != n || 2 * witness_->dim() != n || !is_isotropic(*witness_)) {
      throw InvalidArgument("split witness must be isotropic of dimension n/2");
    }
  }
}

bool BilinearSpace::is_isotropic(const Subspace& h) const {
  const MatrixF& b = h.basis();
  return pairing_matrix(b, gram_, b).rank() == 0;
}

BilinearSpace standard_space(FormType type, std::size_t n, PrimeField field) {
  if (n == 0) throw InvalidArgument("standard_space: dimension must be positive");
  if (type == FormType::skew && n % 2 != 0) {
    throw InvalidArgument("standard_space: skew form needs even dimension, got " + std::to_string(n));
  }
  MatrixF g(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    bool lower_half = type == FormType::skew && i >= n / 2;
    g(i, n - 1 - i) = lower_half ? field.neg(1) : 1;
  }
  std::optional<Subspace> witness;
  if (type == FormType::symmetric && n % 2 == 0) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n / 2; ++i) idx.push_back(i);
    witness = Subspace::coordinate(field, n, idx);
  }
  return BilinearSpace(type, std::move(g), std::move(witness));
}

BilinearSpace zero_space(FormType type, std::size_t n, PrimeField field) {
  return BilinearSpace(type, MatrixF(field, n, n));
}

Subspace perp(const BilinearSpace& space, const Subspace& h) {
  if (h.ambient_dim() != space.dim()) throw InvalidArgument("perp: ambient mismatch");
  MatrixF m = h.basis() * space.gram();
  return rref_canonicalize(m.kernel());
}

Subspace radical(const BilinearSpace& space, const Subspace& h) {
  return subspace_intersect(h, perp(space, h));
}

std::size_t r_invariant(const BilinearSpace& space, const Subspace& h) {
  return pairing_matrix(h.basis(), space.gram(), h.basis()).rank();
}

namespace {

/// Rows in span(w) orthogonal to every row of v.
MatrixF orth_within(const BilinearSpace& space, const MatrixF& w, const MatrixF& v) {
  if (w.rows() == 0) return w;
  MatrixF a = pairing_matrix(w, space.gram(), v);  // rows(w) x rows(v)
  MatrixF coeffs = a.transpose().kernel();
  return coeffs * w;
}

MatrixF row_matrix(const PrimeField& f, std::span<const Scalar> v) {
  MatrixF m(f, 0, v.size());
  m.append_row(v);
  return m;
}

std::vector<Scalar> combine(const PrimeField& f, Scalar s, std::span<const Scalar> a, Scalar t,
                            std::span<const Scalar> b) {
  std::vector<Scalar> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(f.mul(s, a[i]), f.mul(t, b[i]));
  return out;
}

/// Some row (or sum of two rows) of w with nonzero square norm.
std::vector<Scalar> anisotropic_vector(const BilinearSpace& space, const MatrixF& w) {
  for (std::size_t i = 0; i < w.rows(); ++i) {
    if (space.pair(w.row(i), w.row(i)) != 0) return {w.row(i).begin(), w.row(i).end()};
  }
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = i + 1; j < w.rows(); ++j) {
      auto v = combine(space.field(), 1, w.row(i), 1, w.row(j));
      if (space.pair(v, v) != 0) return v;
    }
  }
  throw Error("internal: no anisotropic vector in a nondegenerate symmetric subspace");
}

/// Orthogonal basis u_1..u_m of a nondegenerate symmetric subspace with
/// Q(u_i) = 1 for i < m and Q(u_m) in {1, fixed non-square}.
MatrixF orthonormal_basis(const BilinearSpace& space, MatrixF w) {
  const PrimeField& f = space.field();
  MatrixF out(f, 0, space.dim());
  while (w.rows() > 0) {
    if (w.rows() == 1) {
      auto v = std::vector<Scalar>(w.row(0).begin(), w.row(0).end());
      Scalar d = space.pair(v, v);
      Scalar target = f.is_square(d) ? 1 : f.non_square();
      Scalar s = *f.sqrt(f.div(target, d));
      out.append_row(combine(f, s, v, 0, v));
      break;
    }
    auto a = anisotropic_vector(space, w);
    MatrixF rest = orth_within(space, w, row_matrix(f, a));
    auto b = anisotropic_vector(space, rest);
    Scalar alpha = space.pair(a, a), beta = space.pair(b, b);
    std::vector<Scalar> unit;
    for (Scalar s = 0; s < f.modulus() && unit.empty(); ++s) {
      Scalar rhs = f.div(f.sub(1, f.mul(alpha, f.mul(s, s))), beta);
      if (auto t = f.sqrt(rhs)) unit = combine(f, s, a, *t, b);
    }
    out.append_row(unit);
    w = orth_within(space, w, row_matrix(f, unit));
  }
  return out;
}

/// Symplectic basis e_1, f_1, e_2, f_2, ... with <e_i, f_i> = 1.
MatrixF symplectic_basis(const BilinearSpace& space, MatrixF w) {
  const PrimeField& f = space.field();
  MatrixF out(f, 0, space.dim());
  while (w.rows() > 0) {
    auto e = w.row(0);
    std::size_t j = 1;
    while (j < w.rows() && space.pair(e, w.row(j)) == 0) ++j;
    if (j == w.rows()) throw Error("internal: degenerate skew subspace in symplectic_basis");
    Scalar c = f.inv(space.pair(e, w.row(j)));
    MatrixF pairv(f, 0, space.dim());
    pairv.append_row(e);
    pairv.append_row(combine(f, c, w.row(j), 0, w.row(j)));
    out.append_rows(pairv);
    w = orth_within(space, w, pairv);
  }
  return out;
}

struct WittRows {
  MatrixF x, u, w, y;
};

WittRows witt_rows(const BilinearSpace& space, const Subspace& h) {
  if (!space.is_nondegenerate()) throw InvalidArgument("witt_decompose: ambient form is degenerate");
  if (h.ambient_dim() != space.dim()) throw InvalidArgument("witt_decompose: ambient mismatch");
  const PrimeField& f = space.field();
  const MatrixF& g = space.gram();
  Subspace hp = perp(space, h);
  Subspace m1 = subspace_intersect(h, hp);
  WittRows out{m1.basis(), complement_rows(m1, h), complement_rows(m1, hp),
               complement_rows(subspace_sum(h, hp), Subspace::full(f, space.dim()))};
  // Make M4 orthogonal to M2 and M3 by subtracting its projections.
  for (const MatrixF* part : {&out.u, &out.w}) {
    if (part->rows() == 0 || out.y.rows() == 0) continue;
    MatrixF a_inv = pairing_matrix(*part, g, *part).inverse();
    MatrixF c = pairing_matrix(out.y, g, *part) * a_inv;
    out.y = out.y - c * (*part);
  }
  if (out.y.rows() > 0) {
    // Dual basis: <x_i, y_j> = delta_ij.
    MatrixF p = pairing_matrix(out.x, g, out.y);
    out.y = p.inverse().transpose() * out.y;
    // Kill the self-pairing of M4: y_j -= 1/2 sum_l <y_j, y_l> x_l.
    MatrixF c = pairing_matrix(out.y, g, out.y);
    out.y = out.y - scaled(c * out.x, f.inv(2));
  }
  return out;
}

bool is_zero_matrix(const MatrixF& m) {
  for (Scalar v : m.data())
    if (v != 0) return false;
  return true;
}

}  // namespace

WittSplit witt_decompose(const BilinearSpace& space, const Subspace& h) {
  WittRows r = witt_rows(space, h);
  return {rref_canonicalize(r.x), rref_canonicalize(r.u), rref_canonicalize(r.w),
          rref_canonicalize(r.y)};
}

bool satisfies_pairing_table(const BilinearSpace& space, const WittSplit& split) {
  const Subspace* parts[4] = {&split.m1, &split.m2, &split.m3, &split.m4};
  MatrixF all(space.field(), 0, space.dim());
  std::size_t total = 0;
  for (const Subspace* s : parts) {
    all.append_rows(s->basis());
    total += s->dim();
  }
  if (total != space.dim() || all.rank() != total) return false;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      MatrixF block = pairing_matrix(parts[i]->basis(), space.gram(), parts[j]->basis());
      bool perfect_pair = (i == 0 && j == 3) || (i == 3 && j == 0) || (i == 1 && j == 1) ||
                          (i == 2 && j == 2);
      if (perfect_pair) {
        if (parts[i]->dim() != parts[j]->dim() || block.rank() != parts[i]->dim()) return false;
      } else if (!is_zero_matrix(block)) {
        return false;
      }
    }
  }
  return true;
}

int discriminant_class(const BilinearSpace& space, const Subspace& h) {
  if (!space.is_symmetric()) return 0;
  Subspace rad = radical(space, h);
  MatrixF u = complement_rows(rad, h);
  if (u.rows() == 0) return 0;
  Scalar d = pairing_matrix(u, space.gram(), u).determinant();
  return space.field().is_square(d) ? 0 : 1;
}

Subspace apply_matrix(const MatrixF& g, const Subspace& h) {
  return rref_canonicalize(h.basis() * g.transpose());
}

bool is_isometry(const BilinearSpace& space, const MatrixF& g) {
  return g.transpose() * space.gram() * g == space.gram();
}

MatrixF transport_isometry(const BilinearSpace& space, const Subspace& h, const Subspace& h2) {
  if (h.dim() != h2.dim()) throw InvalidArgument("transport_isometry: dimensions differ");
  if (r_invariant(space, h) != r_invariant(space, h2)) {
    throw InvalidArgument("transport_isometry: r-invariants differ");
  }
  if (discriminant_class(space, h) != discriminant_class(space, h2)) {
    throw DiscriminantObstruction(
        "transport_isometry: restricted forms have different discriminant classes");
  }
  auto adapted = [&](const Subspace& s) {
    WittRows r = witt_rows(space, s);
    if (space.is_symmetric()) {
      r.u = orthonormal_basis(space, r.u);
      r.w = orthonormal_basis(space, r.w);
    } else {
      r.u = symplectic_basis(space, r.u);
      r.w = symplectic_basis(space, r.w);
    }
    return r;
  };
  auto stack = [&](const WittRows& r) {
    MatrixF m = r.x;
    m.append_rows(r.u);
    m.append_rows(r.w);
    m.append_rows(r.y);
    return m;
  };
  WittRows a = adapted(h);
  WittRows b = adapted(h2);
  MatrixF ra = stack(a);
  MatrixF rb = stack(b);
  if (pairing_matrix(ra, space.gram(), ra) != pairing_matrix(rb, space.gram(), rb)) {
    throw DiscriminantObstruction("transport_isometry: complements are not isometric");
  }
  const PrimeField& f = space.field();
  MatrixF ra_t_inv = ra.transpose().inverse();
  MatrixF g = rb.transpose() * ra_t_inv;
  if (space.is_symmetric() && g.determinant() != 1) {
    // An orthogonal reflection inside M2 or M3 flips the determinant.
    std::size_t row = rb.rows();
    if (b.u.rows() > 0) row = b.x.rows();
    else if (b.w.rows() > 0) row = b.x.rows() + b.u.rows();
    if (row < rb.rows()) {
      for (std::size_t c = 0; c < rb.cols(); ++c) rb(row, c) = f.neg(rb(row, c));
      g = rb.transpose() * ra_t_inv;
    }
  }
  if (!is_isometry(space, g) || !(apply_matrix(g, h) == h2)) {
    throw Error("internal: transporter failed its own postcondition");
  }
  return g;
}

}  // namespace strata
