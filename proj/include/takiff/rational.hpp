#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace takiff {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Canonical "p/q" string, "p" when q = 1, sign on the numerator.
std::string rat_to_string(const Rational& r);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input
/// or zero denominator. Result is reduced with positive denominator.
Rational rat_from_string(std::string_view s);

bool vec_is_zero(const RatVec& v);
RatVec vec_zero(std::size_t n);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const RatVec& a, const Rational& c);

}  // namespace takiff
