#ifndef STRATA_ORBIT_CATALOG_HPP
#define STRATA_ORBIT_CATALOG_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "strata/bilinear.hpp"
#include "strata/errors.hpp"
#include "strata/subspace.hpp"

namespace strata {

/// The orbit parameter r: an integer, or one of the two rulings 0' and 0''
/// of maximal isotropic subspaces in an even symmetric space.
/// Ordered 0' < 0'' < 0 < 1 < ...
struct RankSymbol {
  enum class Kind { prime0, doubleprime0, integer };
  Kind kind = Kind::integer;
  std::size_t value = 0;

  static RankSymbol integer(std::size_t r) { return {Kind::integer, r}; }
  static RankSymbol prime0() { return {Kind::prime0, 0}; }
  static RankSymbol doubleprime0() { return {Kind::doubleprime0, 0}; }

  bool is_special() const { return kind != Kind::integer; }
  /// 0' and 0'' count as 0.
  std::size_t numeric() const { return kind == Kind::integer ? value : 0; }
  /// "3", "0'" or "0''".
  std::string to_string() const;

  friend auto operator<=>(const RankSymbol&, const RankSymbol&) = default;
};

struct SingleLabel {
  FormType form = FormType::symmetric;
  std::size_t n = 0;
  std::size_t k = 0;
  RankSymbol r;

  std::string to_string() const;
  friend auto operator<=>(const SingleLabel&, const SingleLabel&) = default;
};

bool is_valid(const SingleLabel& label);
void require_valid(const SingleLabel& label);

/// All valid labels for Gr_k of an n-dimensional split space, in RankSymbol order.
std::vector<SingleLabel> valid_labels(FormType form, std::size_t n, std::size_t k);

/// (k, r) of h, with the ruling of a maximal isotropic h read off from the
/// parity of dim(h cap witness).
SingleLabel label_of(const BilinearSpace& space, const Subspace& h);

/// k(n-2k+r) + r(k-r) + (k-r)(k-r+eps)/2, eps = +1 skew, -1 symmetric.
std::size_t orbit_dim(const SingleLabel& label);
std::size_t component_group_order(const SingleLabel& label);

struct OrbitRecord {
  SingleLabel label;
  std::size_t dim;
  std::size_t component_group_order;
};
OrbitRecord orbit_record(const SingleLabel& label);

/// Exhaustive count of each label over Gr_k(space).
std::map<RankSymbol, std::uint64_t> stratum_census(const BilinearSpace& space, std::size_t k,
                                                   const EnumerationBudget& budget = {},
                                                   unsigned workers = 0);
std::uint64_t stratum_points(const BilinearSpace& space, std::size_t k, RankSymbol r,
                             const EnumerationBudget& budget = {}, unsigned workers = 0);

}  // namespace strata

#endif  // STRATA_ORBIT_CATALOG_HPP
