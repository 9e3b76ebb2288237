#pragma once

// Test-only oracles, kept independent of the library's elimination paths:
// naive rational Gauss elimination for ranks and grid searches for minima.

#include <vector>

#include "takiff/matrix.hpp"
#include "takiff/rational.hpp"

namespace oracle {

using takiff::RatMatrix;
using takiff::Rational;
using takiff::RatVec;

inline std::size_t naive_rank(std::vector<RatVec> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < ncols; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][col]) == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t naive_rank(const RatMatrix& m) {
  std::vector<RatVec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return naive_rank(std::move(rows));
}

/// All vectors in {-h..h}^n, enumerated odometer-style.
template <typename F>
void for_each_grid_point(std::size_t n, long h, F&& f) {
  std::vector<long> point(n, -h);
  while (true) {
    RatVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(point[i]);
    f(v);
    std::size_t i = 0;
    while (i < n && point[i] == h) point[i++] = -h;
    if (i == n) break;
    ++point[i];
  }
}

}  // namespace oracle
