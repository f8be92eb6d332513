#ifndef STRATA_BILINEAR_HPP
#define STRATA_BILINEAR_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "strata/matrix.hpp"
#include "strata/subspace.hpp"

namespace strata {

enum class FormType { symmetric, skew };

std::string to_string(FormType t);

/// A vector space F_p^n with a symmetric or alternating Gram matrix, possibly
/// degenerate. Even-dimensional nondegenerate symmetric spaces carry a fixed
/// maximal isotropic subspace used to tell the two rulings apart.
class BilinearSpace {
 public:
  BilinearSpace(FormType type, MatrixF gram, std::optional<Subspace> split_witness = std::nullopt);

  FormType form_type() const { return type_; }
  bool is_symmetric() const { return type_ == FormType::symmetric; }
  std::size_t dim() const { return gram_.rows(); }
  const PrimeField& field() const { return gram_.field(); }
  const MatrixF& gram() const { return gram_; }
  const std::optional<Subspace>& split_witness() const { return witness_; }
  bool is_nondegenerate() const { return nondegenerate_; }

  Scalar pair(std::span<const Scalar> u, std::span<const Scalar> v) const {
    return bilinear_value(gram_, u, v);
  }
  bool is_isotropic(const Subspace& h) const;

 private:
  FormType type_;
  MatrixF gram_;
  std::optional<Subspace> witness_;
  bool nondegenerate_;
};

/// Split standard model: skew antidiag(1..1,-1..-1), symmetric antidiag(1..1).
BilinearSpace standard_space(FormType type, std::size_t n, PrimeField field);
/// The zero form on F_p^n.
BilinearSpace zero_space(FormType type, std::size_t n, PrimeField field);

Subspace perp(const BilinearSpace& space, const Subspace& h);
/// h cap h^perp, the radical of the restricted form.
Subspace radical(const BilinearSpace& space, const Subspace& h);
/// dim h - dim radical(h), i.e. the rank of the restricted Gram matrix.
std::size_t r_invariant(const BilinearSpace& space, const Subspace& h);

struct WittSplit {
  Subspace m1, m2, m3, m4;
};

/// V = M1 + M2 + M3 + M4 with M1 = rad h, M1 + M2 = h, M1 + M3 = h^perp and
/// the only nonzero pairings M1 x M4, M2 x M2, M3 x M3 (all perfect).
WittSplit witt_decompose(const BilinearSpace& space, const Subspace& h);
/// Checks the direct sum and the full pairing table by evaluating Gram blocks.
bool satisfies_pairing_table(const BilinearSpace& space, const WittSplit& split);

/// 0 if the nondegenerate form induced on h / rad h has square discriminant,
/// 1 otherwise. Always 0 for skew forms or r = 0.
int discriminant_class(const BilinearSpace& space, const Subspace& h);

/// g with g^T G g = G and g(h) = h2 (column-vector convention). For symmetric
/// forms det g is made 1 whenever the M2 or M3 summand is nonzero.
MatrixF transport_isometry(const BilinearSpace& space, const Subspace& h, const Subspace& h2);

/// Image of h under v -> g v.
Subspace apply_matrix(const MatrixF& g, const Subspace& h);
bool is_isometry(const BilinearSpace& space, const MatrixF& g);

}  // namespace strata

#endif  // STRATA_BILINEAR_HPP
