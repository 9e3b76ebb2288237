#pragma once

#include <string>
#include <string_view>

#include "takiff/lie_algebra.hpp"
#include "takiff/takiff_algebra.hpp"

namespace takiff {

/// Linear combinations of basis labels with exact rational coefficients,
/// e.g. "e12 + 2/3 h1" or "e_beta - e_m2beta_3a@1". Multiplication is by
/// juxtaposition or '*'; "0" is the zero element.
/// Throws std::invalid_argument on unknown labels or malformed input.
RatVec parse_element(const LieAlgebra& algebra, std::string_view text);

/// "[expr; expr; ...]" lists jet coefficients by T-degree; a bare element
/// expression is the degree-0 coefficient.
Jet parse_jet(const AlgebraPtr& algebra, std::string_view text);

}  // namespace takiff
