#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "takiff/rational.hpp"

namespace takiff {

/// Sparse multivariate polynomial over the rationals. Terms are keyed by
/// exponent vector; the map's lexicographic key order doubles as the
/// monomial order used for exact division.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, Rational>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  std::size_t total_degree() const;  // 0 for the zero polynomial

  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& exps, const Rational& coeff);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly& scale(const Rational& c);

  bool operator==(const MultiPoly& rhs) const {
    return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
  }

  Rational evaluate(const RatVec& point) const;

  /// Exact quotient num/den; nullopt when den does not divide num.
  static std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den);

  /// lcm of the coefficient denominators.
  Integer denominator_lcm() const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  std::size_t nvars_;
  TermMap terms_;  // no zero coefficients stored
};

}  // namespace takiff
