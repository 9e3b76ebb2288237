#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "takiff/matrix.hpp"
#include "takiff/rational.hpp"

namespace takiff {

/// Sparse coordinate vector, sorted by index.
struct SparseVec {
  std::vector<std::pair<std::size_t, Rational>> entries;

  bool empty() const { return entries.empty(); }
  void add_to(RatVec& dense, const Rational& scale) const;
  RatVec to_dense(std::size_t dim) const;
  static SparseVec from_dense(const RatVec& v);
  SparseVec negated() const;
};

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// One product [e_i, e_j] with i < j; everything else follows by antisymmetry.
struct BracketEntry {
  std::size_t i = 0, j = 0;
  SparseVec value;
};

enum class TableCheck {
  Full,     // validate antisymmetry layout and the Jacobi identity
  Trusted,  // constructions that satisfy them by construction
};

/// Finite-dimensional Lie algebra given by exact structure constants.
class LieAlgebra {
 public:
  /// Throws std::invalid_argument naming the offending pair/triple when the
  /// table is rejected.
  static AlgebraPtr create(std::string name, std::vector<std::string> labels,
                           std::vector<BracketEntry> brackets,
                           TableCheck check = TableCheck::Full);

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> label_index(std::string_view label) const;

  /// [e_i, e_j] for arbitrary i, j.
  const SparseVec& product(std::size_t i, std::size_t j) const;
  /// Products listed as given at construction (i < j, nonzero).
  const std::vector<BracketEntry>& bracket_list() const { return brackets_; }

  RatVec bracket_coords(const RatVec& x, const RatVec& y) const;

 private:
  LieAlgebra() = default;

  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<BracketEntry> brackets_;
  std::vector<SparseVec> table_;  // dense (i,j) grid of sparse products
  SparseVec zero_;
};

struct Element {
  AlgebraPtr algebra;
  RatVec coords;
};

struct LinearForm {
  AlgebraPtr algebra;
  RatVec coords;  // coefficients against the dual basis
};

Element make_element(AlgebraPtr algebra, RatVec coords);
Element zero_element(AlgebraPtr algebra);
Element basis_element(AlgebraPtr algebra, std::size_t i);

/// Throws std::invalid_argument when the elements live in different algebras.
Element bracket(const Element& x, const Element& y);

/// Column j holds the coordinates of [x, e_j].
RatMatrix ad_matrix(const Element& x);

std::size_t centralizer_dim(const Element& x);

/// Subalgebra with an echelonized (canonical) basis and induced structure
/// constants as closure witness.
class Subalgebra {
 public:
  /// Echelonizes the spanning set and checks closure under the bracket;
  /// throws std::invalid_argument when the span is not a subalgebra.
  static Subalgebra from_span(AlgebraPtr parent, const std::vector<RatVec>& spanning);

  std::size_t dim() const { return span_.dim(); }
  const AlgebraPtr& parent() const { return parent_; }
  const SpanBasis& span() const { return span_; }
  const AlgebraPtr& induced() const { return induced_; }

  RatVec basis_vector(std::size_t i) const { return span_.basis[i]; }
  bool contains(const RatVec& parent_coords) const { return span_.contains(parent_coords); }
  /// Coordinates w.r.t. the echelon basis; throws when outside the span.
  RatVec coordinates(const RatVec& parent_coords) const;
  /// Parent coordinates of a vector given in subalgebra coordinates.
  RatVec lift(const RatVec& sub_coords) const;

 private:
  AlgebraPtr parent_;
  SpanBasis span_;
  AlgebraPtr induced_;
};

Subalgebra centralizer(const Element& x);

/// dim of {x in h | phi([x, h]) = 0}; phi given against h's basis.
std::size_t coadjoint_centralizer_dim(const LieAlgebra& h, const RatVec& phi);
std::size_t coadjoint_centralizer_dim(const Subalgebra& h, const RatVec& phi_on_basis);

struct QuadraticForm {
  AlgebraPtr algebra;
  RatMatrix matrix;  // K[i][j] = K(e_i, e_j)
};

Rational form_pair(const QuadraticForm& k, const RatVec& x, const RatVec& y);
/// Coordinates of the linear form K(x, .).
RatVec form_apply(const QuadraticForm& k, const RatVec& x);
/// Gram matrix K(b_i, b_j) over the subalgebra basis (may be degenerate).
RatMatrix restrict_form(const QuadraticForm& k, const Subalgebra& h);
/// Restriction of a linear form on the parent to the subalgebra basis.
RatVec restrict_linear_form(const RatVec& phi, const Subalgebra& h);

struct FormReport {
  bool symmetric = false;
  bool nondegenerate = false;
  bool invariant = false;
  std::optional<std::array<std::size_t, 3>> violating_triple;
  bool ok() const { return symmetric && nondegenerate && invariant; }
};

FormReport form_check(const LieAlgebra& g, const RatMatrix& k);

struct DegenerateReport {
  std::size_t radical_dim = 0;
  RatMatrix matrix;
};

/// trace(ad e_i . ad e_j); QuadraticForm only when nondegenerate.
std::variant<QuadraticForm, DegenerateReport> killing_form(const AlgebraPtr& g);

bool is_abelian(const LieAlgebra& g);
bool is_abelian(const Subalgebra& h);

/// The d x d matrix (sum_k c_ijk t_k) whose generic corank is the index.
PolyMatrix coadjoint_structure_matrix(const LieAlgebra& g);

struct IndexResult {
  std::size_t value = 0;
  RankMethod method = RankMethod::Symbolic;
};

/// chi(g) = dim g - generic rank of the coadjoint structure matrix.
IndexResult index(const LieAlgebra& g, const GenericRankOptions& opts = {});

}  // namespace takiff
