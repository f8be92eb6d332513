#include "strata/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace strata {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field())) {
    throw InvalidArgument(std::string(op) + ": ambient mismatch (" +
                          std::to_string(a.ambient_dim()) + " vs " +
                          std::to_string(b.ambient_dim()) + ")");
  }
}

MatrixF reversed_columns(const MatrixF& m) {
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = m.cols() - 1 - j;
  return m.select_columns(cols);
}

}  // namespace

Subspace::Subspace(PrimeField field, std::size_t ambient) : basis_(field, 0, ambient) {}

Subspace Subspace::full(PrimeField field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  std::iota(piv.begin(), piv.end(), 0);
  return Subspace(MatrixF::identity(field, ambient), std::move(piv));
}

Subspace Subspace::coordinate(PrimeField field, std::size_t ambient,
                              std::span<const std::size_t> indices) {
  MatrixF m(field, 0, ambient);
  std::vector<Scalar> row(ambient);
  for (std::size_t i : indices) {
    if (i >= ambient) throw InvalidArgument("coordinate index out of range");
    std::fill(row.begin(), row.end(), 0);
    row[i] = 1;
    m.append_row(row);
  }
  return rref_canonicalize(std::move(m));
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw InvalidArgument("contains: vector length mismatch");
  // Subtract the pivot combination; the residue must vanish.
  const PrimeField& f = field();
  std::vector<Scalar> w(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = w[pivots_[i]];
    if (c == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, row[j]));
  }
  return std::all_of(w.begin(), w.end(), [](Scalar x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

std::vector<Scalar> Subspace::coordinates(std::span<const Scalar> v) const {
  std::vector<Scalar> c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::size_t Subspace::hash() const {
  std::size_t h = basis_.cols() * 0x9e3779b97f4a7c15ULL + basis_.rows();
  for (Scalar x : basis_.data()) h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

Subspace rref_canonicalize(MatrixF m) {
  auto piv = m.rref_in_place();
  return Subspace(std::move(m), std::move(piv));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_sum");
  MatrixF m = a.basis();
  m.append_rows(b.basis());
  return rref_canonicalize(std::move(m));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_intersect");
  if (a.is_zero() || b.is_zero()) return Subspace(a.field(), a.ambient_dim());
  // Zassenhaus: rows (a|a) and (b|0); the rows of shape (0|x) span a cap b.
  const std::size_t n = a.ambient_dim();
  MatrixF z(a.field(), a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) z(r, c) = z(r, n + c) = a.basis()(r, c);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) z(a.dim() + r, c) = b.basis()(r, c);
  auto piv = z.rref_in_place();
  MatrixF out(a.field(), 0, n);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= n) out.append_row(z.row(r).subspan(n, n));
  }
  return rref_canonicalize(std::move(out));
}

Subspace prefix_intersect(const Subspace& h, std::size_t prefix) {
  const std::size_t n = h.ambient_dim();
  if (prefix >= n) return h;
  MatrixF rev = reversed_columns(h.basis());
  auto piv = rev.rref_in_place();
  MatrixF keep(h.field(), 0, n);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= n - prefix) keep.append_row(rev.row(r));
  }
  return rref_canonicalize(reversed_columns(keep));
}

Subspace project_columns(const Subspace& h, std::size_t begin, std::size_t end) {
  if (begin > end || end > h.ambient_dim()) throw InvalidArgument("project_columns: bad range");
  std::vector<std::size_t> cols(end - begin);
  std::iota(cols.begin(), cols.end(), begin);
  return rref_canonicalize(h.basis().select_columns(cols));
}

Subspace embed(const Subspace& h, std::size_t ambient, std::size_t offset) {
  if (offset + h.ambient_dim() > ambient) throw InvalidArgument("embed: does not fit");
  MatrixF m(h.field(), h.dim(), ambient);
  for (std::size_t r = 0; r < h.dim(); ++r)
    for (std::size_t c = 0; c < h.ambient_dim(); ++c) m(r, offset + c) = h.basis()(r, c);
  return rref_canonicalize(std::move(m));
}

Subspace direct_sum(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient_dim() + b.ambient_dim();
  return subspace_sum(embed(a, n, 0), embed(b, n, a.ambient_dim()));
}

MatrixF complement_rows(const Subspace& a, const Subspace& c) {
  if (!c.contains(a)) throw InvalidArgument("complement_rows: a is not contained in c");
  MatrixF out(a.field(), 0, a.ambient_dim());
  MatrixF acc = a.basis();
  std::size_t rank = a.dim();
  for (std::size_t r = 0; r < c.dim() && rank < c.dim(); ++r) {
    MatrixF trial = acc;
    trial.append_row(c.basis().row(r));
    if (trial.rank() > rank) {
      acc = std::move(trial);
      out.append_row(c.basis().row(r));
      ++rank;
    }
  }
  return out;
}

Subspace block_project(const Subspace& h, std::span<const std::size_t> blocks, std::size_t i) {
  std::size_t total = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
  if (total != h.ambient_dim()) throw InvalidArgument("block_project: widths do not sum to ambient");
  if (i >= blocks.size()) throw InvalidArgument("block_project: block index out of range");
  std::size_t offset = std::accumulate(blocks.begin(), blocks.begin() + i, std::size_t{0});
  Subspace upto = prefix_intersect(h, offset + blocks[i]);
  return project_columns(upto, offset, offset + blocks[i]);
}

long double gaussian_estimate(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  long double v = 1;
  long double qq = static_cast<long double>(q);
  for (std::size_t i = 0; i < k; ++i) {
    v *= (std::pow(qq, static_cast<long double>(n - i)) - 1) /
         (std::pow(qq, static_cast<long double>(i + 1)) - 1);
  }
  return v;
}

SubspaceEnumerator::SubspaceEnumerator(std::size_t n, std::size_t k, PrimeField field,
                                       const EnumerationBudget& budget)
    : n_(n), k_(k), field_(field) {
  if (k > n) throw InvalidArgument("enumerate_subspaces: k > n");
  budget.require(gaussian_estimate(n, k, field.modulus()),
                 "Gr_" + std::to_string(k) + "(F_" + std::to_string(field.modulus()) + "^" +
                     std::to_string(n) + ")");
  const std::uint64_t p = field.modulus();
  std::vector<std::size_t> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    Pattern pat;
    pat.pivots = comb;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = comb[r] + 1; c < n; ++c) {
        if (!std::binary_search(comb.begin(), comb.end(), c)) pat.free.emplace_back(r, c);
      }
    }
    pat.size = 1;
    for (std::size_t i = 0; i < pat.free.size(); ++i) pat.size *= p;
    pat.start = total_;
    total_ += pat.size;
    patterns_.push_back(std::move(pat));
    // Next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

std::size_t SubspaceEnumerator::pattern_for(std::uint64_t index) const {
  auto it = std::upper_bound(patterns_.begin(), patterns_.end(), index,
                             [](std::uint64_t v, const Pattern& p) { return v < p.start; });
  return static_cast<std::size_t>(it - patterns_.begin()) - 1;
}

Subspace SubspaceEnumerator::materialize(const Pattern& pat,
                                         const std::vector<Scalar>& digits) const {
  MatrixF m(field_, k_, n_);
  for (std::size_t r = 0; r < k_; ++r) m(r, pat.pivots[r]) = 1;
  for (std::size_t i = 0; i < pat.free.size(); ++i) m(pat.free[i].first, pat.free[i].second) = digits[i];
  return Subspace(std::move(m), pat.pivots);
}

Subspace SubspaceEnumerator::at(std::uint64_t index) const {
  if (index >= total_) throw InvalidArgument("subspace index out of range");
  const Pattern& pat = patterns_[pattern_for(index)];
  std::uint64_t off = index - pat.start;
  std::vector<Scalar> digits(pat.free.size());
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<Scalar>(off % field_.modulus());
    off /= field_.modulus();
  }
  return materialize(pat, digits);
}

std::uint64_t SubspaceEnumerator::index_of(const Subspace& h) const {
  if (h.ambient_dim() != n_ || h.dim() != k_) throw InvalidArgument("index_of: wrong shape");
  auto it = std::lower_bound(patterns_.begin(), patterns_.end(), h.pivots(),
                             [](const Pattern& p, const std::vector<std::size_t>& v) {
                               return p.pivots < v;
                             });
  const Pattern& pat = *it;
  std::uint64_t off = 0;
  for (const auto& [r, c] : pat.free) off = off * field_.modulus() + h.basis()(r, c);
  return pat.start + off;
}

void SubspaceEnumerator::for_each(std::uint64_t begin, std::uint64_t end,
                                  const std::function<void(const Subspace&)>& visit) const {
  end = std::min(end, total_);
  if (begin >= end) return;
  const Scalar p = field_.modulus();
  std::size_t pi = pattern_for(begin);
  std::uint64_t off = begin - patterns_[pi].start;
  std::vector<Scalar> digits(patterns_[pi].free.size());
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<Scalar>(off % p);
    off /= p;
  }
  Subspace cur = materialize(patterns_[pi], digits);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    visit(cur);
    if (idx + 1 == end) break;
    const Pattern& pat = patterns_[pi];
    // Increment the base-p counter in place.
    bool wrapped = true;
    for (std::size_t i = pat.free.size(); i-- > 0;) {
      auto [r, c] = pat.free[i];
      Scalar& e = cur.basis_(r, c);
      if (++e < p) {
        wrapped = false;
        break;
      }
      e = 0;
    }
    if (wrapped) {
      ++pi;
      digits.assign(patterns_[pi].free.size(), 0);
      cur = materialize(patterns_[pi], digits);
    }
  }
}

void for_each_between(const Subspace& a, const Subspace& c, std::size_t d,
                      const std::function<void(const Subspace&)>& visit,
                      const EnumerationBudget& budget) {
  if (d < a.dim() || d > c.dim()) return;
  MatrixF t = complement_rows(a, c);
  SubspaceEnumerator quotient(t.rows(), d - a.dim(), a.field(), budget);
  quotient.for_each([&](const Subspace& s) {
    MatrixF m = a.basis();
    m.append_rows(s.basis() * t);
    visit(rref_canonicalize(std::move(m)));
  });
}

std::vector<Subspace> subspaces_between(const Subspace& a, const Subspace& c, std::size_t d,
                                        const EnumerationBudget& budget) {
  std::vector<Subspace> out;
  for_each_between(a, c, d, [&](const Subspace& x) { out.push_back(x); }, budget);
  return out;
}

}  // namespace strata
