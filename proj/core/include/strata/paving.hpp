#ifndef STRATA_PAVING_HPP
#define STRATA_PAVING_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "strata/bilinear.hpp"
#include "strata/polynomial.hpp"

namespace strata {

struct PavingPiece {
  std::size_t id;
  /// Branch taken at each recursion level, e.g. "X1.X3.X2".
  std::string path;
  std::size_t affine_dim;
  /// dim(H cap M_i) for every flag member, constant on the piece.
  std::vector<std::size_t> invariants;
};

namespace detail {
struct PavingNode;
}

/// Affine paving of the isotropic Grassmannian Gr_k(V)^iso relative to an
/// isotropic flag M_1 <= ... <= M_c, built by splitting off an isotropic line
/// L at each step:
///   X1 = {L <= H},  X2 = {L not in H, H <= L^perp},  X3 = {H not in L^perp}.
/// In a degenerate space L is taken in the radical and only X1, X2 occur.
class Paving {
 public:
  Paving(const BilinearSpace& space, std::size_t k, std::vector<Subspace> flag);

  const BilinearSpace& space() const { return space_; }
  std::size_t k() const { return k_; }
  const std::vector<Subspace>& flag() const { return flag_; }
  const std::vector<PavingPiece>& pieces() const { return pieces_; }

  /// Replays the case analysis; h must be isotropic of dimension k.
  std::size_t classify(const Subspace& h) const;
  /// sum over pieces of q^{affine_dim}
  IntPolynomial polynomial() const;
  /// Pieces reached through each top-level branch (X1, X2, X3).
  std::vector<std::size_t> branch_sizes() const;

 private:
  BilinearSpace space_;
  std::size_t k_;
  std::vector<Subspace> flag_;
  std::shared_ptr<const detail::PavingNode> root_;
  std::vector<PavingPiece> pieces_;
};

Paving build_paving(const BilinearSpace& space, std::size_t k, std::vector<Subspace> flag = {});
std::size_t classify_point(const Paving& paving, const Subspace& h);

/// Number of isotropic k-subspaces of the split standard space, as a polynomial in q.
IntPolynomial iso_count(FormType form, std::size_t n, std::size_t k);

/// Exhaustive list of isotropic k-subspaces.
std::vector<Subspace> isotropic_subspaces(const BilinearSpace& space, std::size_t k,
                                          const EnumerationBudget& budget = {});

struct FiberedPieceCount {
  std::size_t piece;
  std::size_t affine_dim;
  std::vector<std::size_t> invariants;
  std::uint64_t count;
  std::uint64_t expected;  // #Gr_r(M_1 cap rad V) * p^{affine_dim}
};

struct FiberedPartition {
  std::size_t radical_dim;  // dim(M_1 cap rad V)
  std::uint64_t base_count;  // #Gr_r(M_1 cap rad V)
  std::vector<FiberedPieceCount> pieces;
  bool uniform_profile = true;  // every R gives the same piece list
  bool ok = true;
};

/// Y(r,k) = {(R, H) : R <= H, R in Gr_r(M_1 cap rad V), H in Gr_k(V)^iso},
/// partitioned by the paving of Gr_{k-r}(V/R)^iso with flag M_i/R applied to H/R.
FiberedPartition fibered_partition_counts(const BilinearSpace& space,
                                          const std::vector<Subspace>& flag, std::size_t r,
                                          std::size_t k, const EnumerationBudget& budget = {});

}  // namespace strata

#endif  // STRATA_PAVING_HPP
