#pragma once

#include <vector>

#include "takiff/lie_algebra.hpp"

namespace takiff {

/// g_m = g (x) C[T]/T^{m+1}, dimension (m+1) dim g. Basis indexing is
/// degree-major: flat index = degree * dim(g) + base index, so projection
/// between levels is a prefix truncation. Degree-0 basis vectors keep the
/// base labels; higher degrees are labelled "x@k".
class TakiffAlgebra {
 public:
  TakiffAlgebra(AlgebraPtr base, std::size_t level);

  const AlgebraPtr& base() const { return base_; }
  std::size_t level() const { return level_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_->dim(); }

  std::size_t flat_index(std::size_t degree, std::size_t base_index) const {
    return degree * base_->dim() + base_index;
  }

 private:
  AlgebraPtr base_;
  std::size_t level_ = 0;
  AlgebraPtr algebra_;
};

/// Finitely supported element of g_infinity: coefficient vectors by
/// T-degree, trailing zeros normalized away.
struct Jet {
  AlgebraPtr base;
  std::vector<RatVec> coeffs;

  std::size_t support() const { return coeffs.size(); }
  /// Coefficient at degree k (zero beyond the support).
  RatVec coeff(std::size_t k) const;
};

Jet make_jet(AlgebraPtr base, std::vector<RatVec> coeffs);
Jet jet_from_element(const Element& x);

/// x(m) in g_m.
Element project(const Jet& x, const TakiffAlgebra& gm);
/// Jet with the coefficients of an element of g_m.
Jet embed(const TakiffAlgebra& gm, const Element& v);

Jet jet_bracket(const Jet& x, const Jet& y);
Jet jet_add(const Jet& x, const Jet& y);

/// Coefficients shifted up by k: (0,...,0,x_0,x_1,...).
Jet shift_jet(const Jet& x, std::size_t k);

/// ad of x(m) on g_m, assembled blockwise from the base structure constants
/// (block (a,b) = ad(x_{a-b})).
RatMatrix takiff_ad_matrix(const Jet& x, std::size_t m);

/// dim g_m^{x(m)} = (m+1) d - rank of the ad matrix.
std::size_t takiff_centralizer_dim(const Jet& x, std::size_t m);

/// Extended invariant form on g_m: K(x(m), y(m)) = sum_k K(x_k, y_{m-k}).
QuadraticForm extend_form(const TakiffAlgebra& gm, const QuadraticForm& base_form);

/// The linear form K(x(m), .) assembled degreewise: block a = K(x_{m-a}, .).
RatVec duality_vector(const Jet& x, const TakiffAlgebra& gm, const QuadraticForm& base_form);

/// Both sides of the centralizer recursion at level m >= 2:
/// lhs = dim g_m^{x(m)} directly, rhs via the centralizer of x(m-1),
/// the restricted form built from x'_i = (i+1) x_{i+1}, and level m-2.
std::pair<std::size_t, std::size_t> recursion_lhs_rhs(const Jet& x, std::size_t m,
                                                      const QuadraticForm& base_form);

/// lhs = dim g_1^{(x0,x1)}, rhs = dim g^{x0} + dim of the coadjoint
/// centralizer of K(x1, .) restricted to g^{x0}.
std::pair<std::size_t, std::size_t> m1_formula(const Element& x0, const Element& x1,
                                               const QuadraticForm& base_form);

/// exp(ad(y (x) T^l)) on g_m, exact because ad raises degree by l >= 1.
/// Throws std::invalid_argument for l = 0.
RatMatrix elementary_automorphism(const Element& y, std::size_t l, const TakiffAlgebra& gm);

/// Moves the coefficients of degrees 1..m into S by composing elementary
/// automorphisms, given g = V + S with V inside [g, x_0]. The result has the
/// same centralizer dimensions as x at every level <= m.
Jet project_to_slice(const Jet& x, std::size_t m, const std::vector<RatVec>& v_span,
                     const std::vector<RatVec>& s_span);

}  // namespace takiff
