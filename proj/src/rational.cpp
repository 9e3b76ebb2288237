#include "takiff/rational.hpp"

#include <stdexcept>

namespace takiff {

std::string rat_to_string(const Rational& r) { return r.get_str(); }

Rational rat_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string text(s);
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
  Rational r(raw);
  mpq_clear(raw);
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  r.canonicalize();
  return r;
}

bool vec_is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

RatVec vec_zero(std::size_t n) { return RatVec(n, Rational(0)); }

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

RatVec vec_scale(const RatVec& a, const Rational& c) {
  RatVec out(a);
  for (auto& x : out) x *= c;
  return out;
}

}  // namespace takiff
