#ifndef STRATA_SUM_SPACE_HPP
#define STRATA_SUM_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strata/bilinear.hpp"
#include "strata/orbit_catalog.hpp"
#include "strata/polynomial.hpp"

namespace strata {

/// Ordered direct sum B = B_1 + ... + B_m, filtered by B_{<=i}.
class SumSpace {
 public:
  explicit SumSpace(std::vector<BilinearSpace> factors);

  std::size_t factor_count() const { return factors_.size(); }
  const BilinearSpace& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<BilinearSpace>& factors() const { return factors_; }
  const std::vector<std::size_t>& block_dims() const { return dims_; }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t dim() const { return total_; }
  const PrimeField& field() const { return factors_.front().field(); }

  /// Block-diagonal Gram matrix of the whole space (forms may be of mixed type).
  MatrixF block_gram() const;
  /// Compact name such as "Sp2+O3".
  std::string to_string() const;

 private:
  std::vector<BilinearSpace> factors_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

struct FactorSpec {
  FormType form;
  std::size_t dim;
  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

/// Sum of split standard factors over F_p.
SumSpace standard_sum(const std::vector<FactorSpec>& factors, PrimeField field);

struct MultiLabel {
  std::vector<SingleLabel> parts;

  std::size_t k() const;
  /// "((1,0),(0,0'))"
  std::string to_string() const;
  friend auto operator<=>(const MultiLabel&, const MultiLabel&) = default;
};

bool is_valid(const SumSpace& space, const MultiLabel& label);

/// Omega_k in lexicographic order of (composition, per-factor r).
std::vector<MultiLabel> enumerate_omega(const SumSpace& space, std::size_t k);

/// k_i = dim pr_i h, r_i = label of pr_i h in B_i.
MultiLabel multilabel_of(const SumSpace& space, const Subspace& h);
/// All pr_i h at once (one reverse echelon pass).
std::vector<Subspace> block_projections(const SumSpace& space, const Subspace& h);

/// sum_i orbit_dim(k_i, r_i) + sum_{i<j} k_j (n_i - k_i).
std::size_t orbit_dim_multi(const MultiLabel& label);
/// d = #{symmetric factors with max(0, 2k_i - n_i) < r_i}.
std::size_t component_exponent(const MultiLabel& label);
std::size_t component_group_order_multi(const MultiLabel& label);
/// Exponent of p in the affine bundle over the product of factor strata.
std::size_t bundle_rank(const MultiLabel& label);

struct SliceBlock {
  std::size_t i;
  std::size_t j;
  char block;  // 'a', 'b', 'c' or 'd'
  long long weight;
  std::size_t dim;
};

struct SliceWeightReport {
  std::vector<SliceBlock> blocks;
  long long min_weight = 0;
  bool all_positive = true;
  /// Sum of block dimensions; equals the codimension of the orbit.
  std::size_t total_dim = 0;
};

/// Weights of the contracting torus on the slice: for i < j the four blocks
/// a, b, c, d with weights e_j - e_i + {1, 0, 2, 1}; for i = j the
/// anti-self-adjoint c block with weight 2. Exponents must strictly increase.
SliceWeightReport slice_weights(const MultiLabel& label, const std::vector<long long>& exponents);

using OrbitCensus = std::map<MultiLabel, std::uint64_t>;

OrbitCensus orbit_census(const SumSpace& space, std::size_t k, const EnumerationBudget& budget = {},
                         unsigned workers = 0);
std::uint64_t orbit_points_multi(const SumSpace& space, const MultiLabel& label,
                                 const EnumerationBudget& budget = {}, unsigned workers = 0);
/// p^{bundle_rank} * prod_i stratum_points(B_i, k_i, r_i).
std::uint64_t orbit_points_bundle(const SumSpace& space, const MultiLabel& label,
                                  const EnumerationBudget& budget = {}, unsigned workers = 0);

}  // namespace strata

#endif  // STRATA_SUM_SPACE_HPP
