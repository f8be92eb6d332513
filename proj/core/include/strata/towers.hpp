#ifndef STRATA_TOWERS_HPP
#define STRATA_TOWERS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strata/bilinear.hpp"
#include "strata/polynomial.hpp"
#include "strata/sum_space.hpp"

namespace strata {

/// A point of X(k, r): for each factor i, P~_i in B_i and P_i, H_i in B
/// (contained in B_{<=i}).
struct FlagDatum {
  std::vector<Subspace> p_tilde;
  std::vector<Subspace> p;
  std::vector<Subspace> h;

  friend bool operator==(const FlagDatum&, const FlagDatum&) = default;
};

/// Checks every defining condition of X(k, r) for d.
bool is_flag_datum(const SumSpace& space, const MultiLabel& label, const FlagDatum& d);

struct TowerLayer {
  enum class Kind {
    grassmannian,      // Gr_dim(F^ambient)
    iso_grassmannian,  // Gr_dim(B_i)^iso
    ruling             // one family of maximal isotropics in B_i
  };
  std::string base;  // "Y1", "Y'2", ...
  Kind kind;
  FormType form = FormType::symmetric;
  std::size_t factor = 0;
  std::size_t ambient = 0;
  std::size_t dim = 0;
  IntPolynomial count;

  std::string to_string() const;
};

struct TowerDescriptor {
  std::vector<TowerLayer> layers;
  /// Product of the layer counts.
  IntPolynomial total() const;
};

/// Y_1 = prod_i Y_1i, then for each j the P-layer Y'_j -> Y_j and the H-layer
/// Y_{j+1} -> Y'_j, all Grassmannian bundles.
TowerDescriptor x_tower(const SumSpace& space, const MultiLabel& label);

void for_each_x_point(const SumSpace& space, const MultiLabel& label,
                      const std::function<void(const FlagDatum&)>& visit,
                      const EnumerationBudget& budget = {});
std::vector<FlagDatum> x_points(const SumSpace& space, const MultiLabel& label,
                                const EnumerationBudget& budget = {});

/// H_m
const Subspace& mu(const FlagDatum& d);

struct FiberPoint {
  FlagDatum datum;
  /// Per factor: dim P_i cap B_{<i}, dim H_i cap B_{<i}, dim P_i cap (rad pr_i M + B_{<i}).
  std::vector<std::size_t> invariants;
};

struct MuFiber {
  MultiLabel m_label;
  bool open = false;  // m_label equals the tower label
  std::vector<FiberPoint> points;
  /// Number of points per invariant vector.
  std::map<std::vector<std::size_t>, std::uint64_t> groups;
  /// Every group has p^e points for some e. Informational: a group is a union
  /// of paving pieces, so this can fail on a correct fiber.
  bool groups_are_powers = true;
  /// Over the open orbit the fiber is a single point.
  bool open_ok = true;
};

MuFiber mu_fiber(const SumSpace& space, const MultiLabel& label, const Subspace& m,
                 const EnumerationBudget& budget = {});
std::uint64_t mu_fiber_size(const SumSpace& space, const MultiLabel& label, const Subspace& m,
                            const EnumerationBudget& budget = {});

/// Labels of mu(x) over all x in X(k, r). Experimental closure order:
/// l' <= l iff l' is in closure_labels(l).
std::set<MultiLabel> closure_labels(const SumSpace& space, const MultiLabel& label,
                                    const EnumerationBudget& budget = {});

/// First subspace (enumeration order) carrying the given label.
std::optional<Subspace> orbit_representative(const SumSpace& space, const MultiLabel& label,
                                             const EnumerationBudget& budget = {});

/// The single-factor resolution C~_{k,r}(V) = {(P, H) : P <= H <= P^perp}, dim P = k - r.
struct SingleResolution {
  std::vector<std::pair<Subspace, Subspace>> pairs;
  std::uint64_t image_size = 0;
  /// #{H in Gr_k(V) : dim rad H >= k - r}
  std::uint64_t expected_image_size = 0;
  bool image_ok = false;
  /// One preimage for every H with dim rad H = k - r.
  bool injective_ok = false;
};

SingleResolution single_resolution(const BilinearSpace& space, std::size_t k, std::size_t r,
                                   const EnumerationBudget& budget = {});

/// Factors that receive Q-data in the hat tower: symmetric, max(0, 2k_i - n_i) < r_i.
std::vector<std::size_t> hat_factors(const MultiLabel& label);

/// Q~_i, Q_i for one hat factor. For odd r_i both live in the extension by a
/// coordinate of norm 1 appended last: Q~_i in B_i + F, Q_i in B + F.
struct HatExtra {
  std::size_t factor;
  bool odd;
  Subspace q_tilde;
  Subspace q;

  friend bool operator==(const HatExtra&, const HatExtra&) = default;
};

struct HatDatum {
  FlagDatum base;
  std::vector<HatExtra> extra;
};

/// B_i + F with the form <v,v'> + zz'.
BilinearSpace extended_factor(const BilinearSpace& factor);

void for_each_hat_extension(const SumSpace& space, const MultiLabel& label, const FlagDatum& x,
                            const std::function<void(const HatDatum&)>& visit,
                            const EnumerationBudget& budget = {});
std::vector<HatDatum> xhat_points(const SumSpace& space, const MultiLabel& label,
                                  const EnumerationBudget& budget = {});

struct HatFactorReport {
  std::size_t factor;
  bool odd;
  /// dim of N_i = pr_i M / rad (even r) or (pr_i M + F) / rad (odd r)
  std::size_t quotient_dim;
  bool split;
  std::uint64_t distinct_q_tilde;
  /// maximal isotropic subspaces of N_i, by brute force
  std::uint64_t expected;
  /// rulings met by the fiber points
  std::size_t rulings;
};

struct HatFiber {
  MultiLabel m_label;
  bool open = false;
  std::vector<HatDatum> points;
  std::vector<HatFactorReport> factors;  // filled for open M only
  bool product_ok = false;
  std::size_t components = 0;
  std::size_t expected_components = 0;
  bool ok = false;
};

HatFiber muhat_fiber(const SumSpace& space, const MultiLabel& label, const Subspace& m,
                     const EnumerationBudget& budget = {});

/// Over F_p one label can cover several orbits, told apart by the
/// discriminant of pr_i M / rad. This picks the first M (enumeration order)
/// for which every such quotient is isometric to the standard form of its
/// dimension, which is the same choice for every p.
std::optional<Subspace> standard_representative(const SumSpace& space, const MultiLabel& label,
                                                const EnumerationBudget& budget = {});

/// First open-orbit M whose hat quotients N_i are all split, so that the
/// finite hat fiber meets every component.
std::optional<Subspace> split_open_representative(const SumSpace& space, const MultiLabel& label,
                                                  const EnumerationBudget& budget = {});

}  // namespace strata

#endif  // STRATA_TOWERS_HPP
