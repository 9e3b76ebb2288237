#pragma once

#include <string>

#include "takiff/lie_algebra.hpp"

namespace takiff {

struct JordanDecomposition {
  Element semisimple;
  Element nilpotent;
};

/// x = x_ss + x_nil with [x_ss, x_nil] = 0, ad(x_ss) with squarefree minimal
/// polynomial and ad(x_nil) nilpotent. The semisimple part of ad(x) is found
/// by Newton iteration against the squarefree part of its minimal polynomial
/// and pulled back through ad (injective on a semisimple algebra).
/// Throws std::invalid_argument when the Killing form of the algebra is
/// degenerate, std::runtime_error when the pull-back system is inconsistent.
JordanDecomposition jordan_decompose(const Element& x);

struct JordanSplitReport {
  bool pass = false;
  std::size_t dim_centralizer_x = 0;
  std::size_t dim_centralizer_ss = 0;
  std::size_t dim_nested_centralizer = 0;
  std::size_t dim_image_x = 0;
  std::size_t dim_image_ss = 0;
  std::size_t dim_nil_bracket = 0;
  std::string detail;
};

/// Checks g^x = (g^{x_ss})^{x_nil} and [g,x] = [g^{x_ss},x_nil] + [g,x_ss]
/// (direct sum) by exact dimension counts and span comparisons.
JordanSplitReport jordan_splitting_check(const Element& x);

}  // namespace takiff
