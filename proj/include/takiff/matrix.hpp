#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "takiff/multipoly.hpp"
#include "takiff/rational.hpp"

namespace takiff {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec col(std::size_t c) const;

  RatMatrix transposed() const;
  RatVec apply(const RatVec& v) const;  // matrix * column vector

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  RatMatrix& scale(const Rational& c);
  bool is_zero() const;

  bool operator==(const RatMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination after clearing row
/// denominators. Deterministic: columns scanned left to right, pivot row is
/// the first with a nonzero entry.
std::size_t rank(const RatMatrix& m);

/// Canonical kernel basis: one vector per free column f, with coordinate 1
/// at f and 0 at the other free columns. rank + size = cols.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

/// One solution of A x = b with all free coordinates 0; nullopt when
/// inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

/// Row-reduced echelon basis of a span, with pivot bookkeeping so that
/// membership tests and coordinates are exact and canonical.
struct SpanBasis {
  std::vector<RatVec> basis;  // RREF rows in pivot order
  std::vector<std::size_t> pivot_cols;
  std::size_t ambient = 0;

  std::size_t dim() const { return basis.size(); }
  bool contains(const RatVec& v) const;
  std::optional<RatVec> coordinates(const RatVec& v) const;
};

SpanBasis row_span(const std::vector<RatVec>& vectors, std::size_t ambient);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, MultiPoly(nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  MultiPoly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const MultiPoly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMatrix evaluate(const RatVec& point) const;

 private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<MultiPoly> data_;
};

/// Rank of the matrix evaluated at a rational point; always <= generic rank.
std::size_t sampled_rank(const PolyMatrix& m, const RatVec& point);

/// Rank over the rational function field, by fraction-free elimination with
/// exact polynomial division (entries stay minors). Full pivoting on
/// (total degree, term count, row, col); deterministic.
std::size_t symbolic_rank(const PolyMatrix& m);

enum class RankMethod { Symbolic, Sampled };

struct GenericRankOptions {
  std::size_t symbolic_cells_cap = 1024;  // rows*cols above this forces sampling
  std::size_t symbolic_vars_cap = 12;
  std::size_t samples = 8;
  long height = 1000;
  std::uint64_t seed = 0;
  // Sampling stops early once this rank is reached (it cannot be exceeded
  // when it equals the generic rank).
  std::size_t early_stop_rank = std::numeric_limits<std::size_t>::max();
  bool want_witness_point = false;
};

struct GenericRankResult {
  std::size_t rank = 0;
  RankMethod method = RankMethod::Symbolic;
  std::size_t samples_used = 0;
  std::optional<RatVec> witness_point;  // a point attaining `rank`, when known
};

/// Symbolic elimination when the matrix is within the caps, otherwise the
/// maximum of sampled_rank over seeded random points (flagged Sampled).
GenericRankResult generic_rank(const PolyMatrix& m, const GenericRankOptions& opts = {});

}  // namespace takiff
