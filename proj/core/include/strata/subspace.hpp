#ifndef STRATA_SUBSPACE_HPP
#define STRATA_SUBSPACE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "strata/errors.hpp"
#include "strata/field.hpp"
#include "strata/matrix.hpp"

namespace strata {

/// A subspace of F_p^n stored by its reduced row echelon basis.
///
/// The basis is canonical, so equality, ordering and hashing are structural.
class Subspace {
 public:
  /// The zero subspace of F_p^n.
  Subspace(PrimeField field, std::size_t ambient);

  static Subspace full(PrimeField field, std::size_t ambient);
  /// span(e_i : i in indices), 0-based.
  static Subspace coordinate(PrimeField field, std::size_t ambient,
                             std::span<const std::size_t> indices);

  const PrimeField& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  const MatrixF& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the RREF basis; v must lie in the subspace.
  std::vector<Scalar> coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis_ < b.basis_; }
  std::size_t hash() const;

 private:
  friend Subspace rref_canonicalize(MatrixF m);
  friend class SubspaceEnumerator;
  Subspace(MatrixF basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  MatrixF basis_;
  std::vector<std::size_t> pivots_;
};

/// Row space of m in canonical form.
Subspace rref_canonicalize(MatrixF m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// h intersected with span(e_0, ..., e_{prefix-1}).
Subspace prefix_intersect(const Subspace& h, std::size_t prefix);
/// Image of h under the coordinate projection onto columns [begin, end).
Subspace project_columns(const Subspace& h, std::size_t begin, std::size_t end);
/// Places h into coordinates [offset, offset + dim) of F_p^ambient.
Subspace embed(const Subspace& h, std::size_t ambient, std::size_t offset);
/// Concatenates rows of a (first coordinates) and b (last coordinates): a (+) b.
Subspace direct_sum(const Subspace& a, const Subspace& b);

/// A complement of a inside c (a must lie in c), by greedy pivot completion
/// over the basis of c. Returned as a row matrix, not canonicalized.
MatrixF complement_rows(const Subspace& a, const Subspace& c);

/// pr_i h = (h cap B_{<=i}) / (h cap B_{<i}) as a subspace of block i (0-based).
Subspace block_project(const Subspace& h, std::span<const std::size_t> blocks, std::size_t i);

/// Number of k-dimensional subspaces of F_q^n as a floating estimate; used for
/// budget checks before any enumeration starts.
long double gaussian_estimate(std::size_t n, std::size_t k, std::uint64_t q);

/// Exhaustive, indexable enumeration of Gr_k(F_p^n).
///
/// Order: pivot patterns in lexicographic order, then free entries read
/// row-major as a base-p counter (first entry most significant).
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(std::size_t n, std::size_t k, PrimeField field,
                     const EnumerationBudget& budget = {});

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return k_; }
  const PrimeField& field() const { return field_; }
  std::uint64_t count() const { return total_; }

  Subspace at(std::uint64_t index) const;
  std::uint64_t index_of(const Subspace& h) const;

  /// Visits indices [begin, end) in order. The visitor must not keep the
  /// reference past the call.
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<void(const Subspace&)>& visit) const;
  void for_each(const std::function<void(const Subspace&)>& visit) const {
    for_each(0, total_, visit);
  }

 private:
  struct Pattern {
    std::vector<std::size_t> pivots;
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
    std::uint64_t size;
    std::uint64_t start;
  };
  std::size_t pattern_for(std::uint64_t index) const;
  Subspace materialize(const Pattern& pat, const std::vector<Scalar>& digits) const;

  std::size_t n_;
  std::size_t k_;
  PrimeField field_;
  std::vector<Pattern> patterns_;
  std::uint64_t total_ = 0;
};

/// Visits every X with a <= X <= c and dim X = d.
void for_each_between(const Subspace& a, const Subspace& c, std::size_t d,
                      const std::function<void(const Subspace&)>& visit,
                      const EnumerationBudget& budget = {});
std::vector<Subspace> subspaces_between(const Subspace& a, const Subspace& c, std::size_t d,
                                        const EnumerationBudget& budget = {});

}  // namespace strata

template <>
struct std::hash<strata::Subspace> {
  std::size_t operator()(const strata::Subspace& s) const noexcept { return s.hash(); }
};

#endif  // STRATA_SUBSPACE_HPP
