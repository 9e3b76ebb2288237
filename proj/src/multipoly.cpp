#include "takiff/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace takiff {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (!takiff::is_zero(c)) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

std::size_t MultiPoly::total_degree() const {
  std::size_t deg = 0;
  for (const auto& [e, c] : terms_) {
    std::size_t d = 0;
    for (auto x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (exps.size() != nvars_) throw std::invalid_argument("exponent vector length mismatch");
  if (takiff::is_zero(coeff)) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (takiff::is_zero(it->second)) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, Rational(-c));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  MultiPoly::Exponents e(a.nvars_, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, Rational(ca * cb));
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rational(-c));
  return out;
}

MultiPoly& MultiPoly::scale(const Rational& c) {
  if (takiff::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Rational MultiPoly::evaluate(const RatVec& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point length mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term(c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

namespace {

bool divides(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (num.nvars_ != den.nvars_) throw std::invalid_argument("variable count mismatch");
  if (num.is_zero()) return MultiPoly(num.nvars_);
  // Lex-leading term of the divisor (largest key).
  const auto& dlead = *den.terms_.rbegin();
  MultiPoly quotient(num.nvars_);
  MultiPoly rem = num;
  Exponents qe(num.nvars_, 0);
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    if (!divides(dlead.first, rlead.first)) return std::nullopt;
    for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = rlead.first[i] - dlead.first[i];
    Rational qc = rlead.second / dlead.second;
    MultiPoly t(num.nvars_);
    t.terms_.emplace(qe, qc);
    quotient += t;
    rem -= t * den;
  }
  return quotient;
}

Integer MultiPoly::denominator_lcm() const {
  Integer l(1);
  for (const auto& [e, c] : terms_) {
    Integer den = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return l;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    Rational mag = first ? c : Rational(abs(c));
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars << "*";
      any_var = true;
      if (i < var_names.size())
        vars << var_names[i];
      else
        vars << "t" << i;
      if (e[i] > 1) vars << "^" << e[i];
    }
    if (!any_var) {
      os << rat_to_string(mag);
    } else {
      if (mag != 1) os << rat_to_string(mag) << "*";
      os << vars.str();
    }
  }
  return os.str();
}

}  // namespace takiff
