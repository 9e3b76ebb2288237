#include "takiff/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "takiff/rng.hpp"

namespace takiff {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMatrix(0, 0);
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged row list");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatVec RatMatrix::row(std::size_t r) const {
  RatVec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

RatVec RatMatrix::col(std::size_t c) const {
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  RatVec out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!takiff::is_zero(at(r, c)) && !takiff::is_zero(v[c])) acc += at(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (!is_zero(bkj)) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) += b.at(i, j);
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) -= b.at(i, j);
  return out;
}

RatMatrix& RatMatrix::scale(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!takiff::is_zero(x)) return false;
  return true;
}

namespace {

// Fraction-free row echelon form over the integers, after clearing row
// denominators (row scaling does not change rank or kernel).
struct IntEchelon {
  std::vector<std::vector<Integer>> mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;
};

IntEchelon fraction_free_echelon(const RatMatrix& m) {
  IntEchelon e;
  e.cols = m.cols();
  e.mat.assign(m.rows(), std::vector<Integer>(m.cols(), Integer(0)));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer den = m.at(r, c).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational scaled = m.at(r, c) * Rational(l);
      e.mat[r][c] = scaled.get_num();
    }
  }

  Integer prev(1);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && sgn(e.mat[r][col]) == 0) ++r;
    if (r == m.rows()) continue;
    std::swap(e.mat[r], e.mat[pivot_row]);
    const std::vector<Integer>& prow = e.mat[pivot_row];
    for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
      std::vector<Integer>& irow = e.mat[i];
      if (sgn(irow[col]) == 0) {
        // Bareiss still rescales skipped rows to keep entries exact minors.
        for (std::size_t j = col + 1; j < m.cols(); ++j) {
          Integer t = prow[col] * irow[j];
          mpz_divexact(irow[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
      } else {
        for (std::size_t j = col + 1; j < m.cols(); ++j) {
          Integer t = prow[col] * irow[j] - irow[col] * prow[j];
          mpz_divexact(irow[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        irow[col] = 0;
      }
    }
    prev = prow[col];
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return e;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return fraction_free_echelon(m).pivot_cols.size(); }

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  IntEchelon e = fraction_free_echelon(m);
  const std::size_t r = e.pivot_cols.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t ri = r; ri-- > 0;) {
      const std::size_t p = e.pivot_cols[ri];
      Rational s(0);
      for (std::size_t j = p + 1; j < m.cols(); ++j) {
        if (sgn(e.mat[ri][j]) != 0 && !is_zero(v[j])) s += Rational(e.mat[ri][j]) * v[j];
      }
      v[p] = -s / Rational(e.mat[ri][p]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  IntEchelon e = fraction_free_echelon(aug);
  // Inconsistent iff the rhs column is a pivot.
  for (auto c : e.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  const std::size_t r = e.pivot_cols.size();
  RatVec x(a.cols(), Rational(0));
  for (std::size_t ri = r; ri-- > 0;) {
    const std::size_t p = e.pivot_cols[ri];
    Rational s = Rational(e.mat[ri][a.cols()]);
    for (std::size_t j = p + 1; j < a.cols(); ++j) {
      if (sgn(e.mat[ri][j]) != 0 && !is_zero(x[j])) s -= Rational(e.mat[ri][j]) * x[j];
    }
    x[p] = s / Rational(e.mat[ri][p]);
  }
  return x;
}

SpanBasis row_span(const std::vector<RatVec>& vectors, std::size_t ambient) {
  // Plain Gauss-Jordan over the rationals; RREF rows are canonical.
  std::vector<RatVec> rows;
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("vector length mismatch");
    if (!vec_is_zero(v)) rows.push_back(v);
  }
  SpanBasis span;
  span.ambient = ambient;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ambient && pivot_row < rows.size(); ++col) {
    std::size_t r = pivot_row;
    while (r < rows.size() && is_zero(rows[r][col])) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[pivot_row]);
    Rational inv = Rational(1) / rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || is_zero(rows[i][col])) continue;
      Rational f = rows[i][col];
      for (std::size_t j = col; j < ambient; ++j) rows[i][j] -= f * rows[pivot_row][j];
    }
    span.pivot_cols.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  span.basis = std::move(rows);
  return span;
}

bool SpanBasis::contains(const RatVec& v) const { return coordinates(v).has_value(); }

std::optional<RatVec> SpanBasis::coordinates(const RatVec& v) const {
  if (v.size() != ambient) throw std::invalid_argument("vector length mismatch");
  RatVec coords(basis.size(), Rational(0));
  RatVec residual = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    coords[i] = residual[pivot_cols[i]];
    if (is_zero(coords[i])) continue;
    for (std::size_t j = 0; j < ambient; ++j) residual[j] -= coords[i] * basis[i][j];
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return coords;
}

RatMatrix PolyMatrix::evaluate(const RatVec& point) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c).evaluate(point);
  return out;
}

std::size_t sampled_rank(const PolyMatrix& m, const RatVec& point) {
  if (point.size() != m.nvars()) throw std::invalid_argument("sample point length mismatch");
  return rank(m.evaluate(point));
}

std::size_t symbolic_rank(const PolyMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<MultiPoly> work(rows * cols, MultiPoly(m.nvars()));
  // Clear rational denominators per row; scaling rows keeps the rank.
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l(1);
    for (std::size_t c = 0; c < cols; ++c) {
      Integer dl = m.at(r, c).denominator_lcm();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dl.get_mpz_t());
    }
    Rational scale{l};
    for (std::size_t c = 0; c < cols; ++c) {
      work[r * cols + c] = m.at(r, c);
      work[r * cols + c].scale(scale);
    }
  }

  std::vector<std::size_t> row_ids(rows), col_ids(cols);
  for (std::size_t i = 0; i < rows; ++i) row_ids[i] = i;
  for (std::size_t j = 0; j < cols; ++j) col_ids[j] = j;

  MultiPoly prev = MultiPoly::constant(m.nvars(), 1);
  std::size_t rk = 0;
  while (!row_ids.empty() && !col_ids.empty()) {
    // Full pivoting: smallest (degree, term count, row, col) nonzero entry.
    std::size_t best_r = 0, best_c = 0;
    bool found = false;
    std::tuple<std::size_t, std::size_t, std::size_t, std::size_t> best_key;
    for (std::size_t ri = 0; ri < row_ids.size(); ++ri) {
      for (std::size_t ci = 0; ci < col_ids.size(); ++ci) {
        const MultiPoly& p = work[row_ids[ri] * cols + col_ids[ci]];
        if (p.is_zero()) continue;
        auto key = std::make_tuple(p.total_degree(), p.term_count(), ri, ci);
        if (!found || key < best_key) {
          best_key = key;
          best_r = ri;
          best_c = ci;
          found = true;
        }
      }
    }
    if (!found) break;
    ++rk;
    const std::size_t pr = row_ids[best_r], pc = col_ids[best_c];
    MultiPoly pivot = work[pr * cols + pc];
    row_ids.erase(row_ids.begin() + best_r);
    col_ids.erase(col_ids.begin() + best_c);
    for (std::size_t i : row_ids) {
      const MultiPoly& mic = work[i * cols + pc];
      for (std::size_t j : col_ids) {
        MultiPoly num = pivot * work[i * cols + j];
        if (!mic.is_zero() && !work[pr * cols + j].is_zero())
          num -= mic * work[pr * cols + j];
        auto q = MultiPoly::divide_exact(num, prev);
        if (!q) throw std::logic_error("fraction-free elimination: inexact division");
        work[i * cols + j] = std::move(*q);
      }
    }
    prev = std::move(pivot);
  }
  return rk;
}

GenericRankResult generic_rank(const PolyMatrix& m, const GenericRankOptions& opts) {
  GenericRankResult res;
  const bool small = m.rows() * m.cols() <= opts.symbolic_cells_cap &&
                     m.nvars() <= opts.symbolic_vars_cap;
  if (small) {
    res.rank = symbolic_rank(m);
    res.method = RankMethod::Symbolic;
    if (opts.want_witness_point) {
      for (std::size_t i = 0; i < opts.samples; ++i) {
        RatVec p = random_int_vector(m.nvars(), opts.height, derive_seed(opts.seed, i));
        ++res.samples_used;
        if (sampled_rank(m, p) == res.rank) {
          res.witness_point = std::move(p);
          break;
        }
      }
    }
    return res;
  }
  res.method = RankMethod::Sampled;
  const std::size_t samples = std::max<std::size_t>(1, opts.samples);
  for (std::size_t i = 0; i < samples; ++i) {
    RatVec p = random_int_vector(m.nvars(), opts.height, derive_seed(opts.seed, i));
    std::size_t r = sampled_rank(m, p);
    ++res.samples_used;
    if (r > res.rank || !res.witness_point) {
      res.rank = r;
      res.witness_point = std::move(p);
    }
    if (res.rank >= opts.early_stop_rank) break;
  }
  return res;
}

}  // namespace takiff
