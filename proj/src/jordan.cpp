#include "takiff/jordan.hpp"

#include <sstream>
#include <stdexcept>

namespace takiff {

namespace {

// Dense univariate polynomials over the rationals, coefficients ascending.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

bool is_zero_poly(const UPoly& p) { return p.empty(); }

std::size_t degree(const UPoly& p) { return p.empty() ? 0 : p.size() - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  if (is_zero_poly(b)) throw std::invalid_argument("division by zero polynomial");
  UPoly q;
  trim(a);
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational inv = Rational(1) / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UPoly derivative(const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly out(p.size() - 1, Rational(0));
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = Rational(i) * p[i];
  trim(out);
  return out;
}

UPoly mod(const UPoly& a, const UPoly& m) { return divmod(a, m).second; }

// Inverse of a modulo m via extended Euclid; a and m must be coprime.
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = mod(a, m);
  UPoly s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1);
    UPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) throw std::runtime_error("polynomial not invertible modulo m");
  Rational inv = Rational(1) / r0[0];
  for (auto& c : s0) c *= inv;
  trim(s0);
  return mod(s0, m);
}

// p(q) mod m by Horner.
UPoly compose_mod(const UPoly& p, const UPoly& q, const UPoly& m) {
  UPoly acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = mod(mul(acc, q), m);
    if (!is_zero(p[i])) acc = add(acc, {p[i]});
  }
  return acc;
}

RatVec flatten(const RatMatrix& m) {
  RatVec v(m.rows() * m.cols(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m.at(r, c);
  return v;
}

// Monic minimal polynomial of a square matrix: first linear dependence among
// I, A, A^2, ...
UPoly minimal_polynomial(const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix power = RatMatrix::identity(n);
  std::vector<RatVec> flats;  // flattened powers, in order
  for (std::size_t k = 0;; ++k) {
    RatVec f = flatten(power);
    RatMatrix prev(flats.size(), n * n);
    for (std::size_t i = 0; i < flats.size(); ++i)
      for (std::size_t j = 0; j < n * n; ++j) prev.at(i, j) = flats[i][j];
    auto combo = solve(prev.transposed(), f);
    if (combo) {
      UPoly p(k + 1, Rational(0));
      for (std::size_t i = 0; i < k; ++i) p[i] = -(*combo)[i];
      p[k] = 1;
      return p;
    }
    flats.push_back(std::move(f));
    power = power * a;
    if (k > n) throw std::logic_error("minimal polynomial search exceeded dimension");
  }
}

UPoly squarefree_part(const UPoly& p) {
  UPoly g = gcd(p, derivative(p));
  if (degree(g) == 0) return monic(p);
  return monic(divmod(p, g).first);
}

RatMatrix evaluate_at_matrix(const UPoly& p, const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix acc(n, n);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * a;
    if (!is_zero(p[i])) {
      for (std::size_t k = 0; k < n; ++k) acc.at(k, k) += p[i];
    }
  }
  return acc;
}

bool is_nilpotent(RatMatrix m) {
  const std::size_t n = m.rows();
  std::size_t steps = 1;
  while (steps < 2 * n) {
    if (m.is_zero()) return true;
    m = m * m;
    steps *= 2;
  }
  return m.is_zero();
}

}  // namespace

JordanDecomposition jordan_decompose(const Element& x) {
  const AlgebraPtr& g = x.algebra;
  if (!std::holds_alternative<QuadraticForm>(killing_form(g)))
    throw std::invalid_argument("Jordan decomposition needs a semisimple algebra "
                                "(Killing form is degenerate)");
  const std::size_t d = g->dim();
  RatMatrix a = ad_matrix(x);
  UPoly p = minimal_polynomial(a);
  UPoly psf = squarefree_part(p);

  RatMatrix s(d, d);
  if (degree(psf) == degree(p)) {
    s = a;  // already semisimple
  } else {
    // Newton: q <- q - psf(q)/psf'(q) in Q[T]/(p), starting from q = T.
    UPoly psfd = derivative(psf);
    UPoly q = {Rational(0), Rational(1)};
    for (std::size_t iter = 0; iter < 64; ++iter) {
      UPoly val = compose_mod(psf, q, p);
      if (is_zero_poly(val)) break;
      UPoly der = compose_mod(psfd, q, p);
      UPoly step = mod(mul(val, inverse_mod(der, p)), p);
      q = mod(sub(q, step), p);
    }
    if (!is_zero_poly(compose_mod(psf, q, p)))
      throw std::runtime_error("Newton iteration for the semisimple part did not converge");
    s = evaluate_at_matrix(q, a);
  }

  // Pull the derivation back through ad: solve ad(z) = S.
  RatMatrix lift(d * d, d);
  for (std::size_t k = 0; k < d; ++k) {
    RatVec col = flatten(ad_matrix(basis_element(g, k)));
    for (std::size_t r = 0; r < d * d; ++r) lift.at(r, k) = col[r];
  }
  auto z = solve(lift, flatten(s));
  if (!z)
    throw std::runtime_error("semisimple part is not an inner derivation "
                             "(non-semisimple input?)");

  Element ss = make_element(g, *z);
  Element nil = make_element(g, vec_sub(x.coords, ss.coords));

  if (!vec_is_zero(bracket(ss, nil).coords))
    throw std::runtime_error("Jordan parts do not commute");
  if (!is_nilpotent(ad_matrix(nil)))
    throw std::runtime_error("nilpotent part check failed");
  UPoly mss = minimal_polynomial(ad_matrix(ss));
  if (degree(gcd(mss, derivative(mss))) != 0)
    throw std::runtime_error("semisimple part has a non-squarefree minimal polynomial");
  return JordanDecomposition{std::move(ss), std::move(nil)};
}

JordanSplitReport jordan_splitting_check(const Element& x) {
  JordanSplitReport rep;
  auto [ss, nil] = jordan_decompose(x);
  const AlgebraPtr& g = x.algebra;
  const std::size_t d = g->dim();

  Subalgebra zx = centralizer(x);
  Subalgebra zss = centralizer(ss);
  rep.dim_centralizer_x = zx.dim();
  rep.dim_centralizer_ss = zss.dim();

  // (g^{x_ss})^{x_nil}, computed inside the induced algebra and lifted back.
  Element nil_in_sub = make_element(zss.induced(), zss.coordinates(nil.coords));
  Subalgebra nested = centralizer(nil_in_sub);
  rep.dim_nested_centralizer = nested.dim();
  std::vector<RatVec> nested_lifted;
  for (std::size_t i = 0; i < nested.dim(); ++i)
    nested_lifted.push_back(zss.lift(nested.basis_vector(i)));

  bool centralizers_equal = false;
  if (nested.dim() == zx.dim()) {
    std::vector<RatVec> both = nested_lifted;
    for (std::size_t i = 0; i < zx.dim(); ++i) both.push_back(zx.basis_vector(i));
    centralizers_equal = (row_span(both, d).dim() == zx.dim());
  }

  // Images: [g, x], [g, x_ss], [g^{x_ss}, x_nil].
  RatMatrix adx = ad_matrix(x);
  RatMatrix adss = ad_matrix(ss);
  std::vector<RatVec> im_x, im_ss, nil_bracket;
  for (std::size_t j = 0; j < d; ++j) {
    im_x.push_back(adx.col(j));
    im_ss.push_back(adss.col(j));
  }
  for (std::size_t i = 0; i < zss.dim(); ++i)
    nil_bracket.push_back(g->bracket_coords(zss.basis_vector(i), nil.coords));

  SpanBasis sx = row_span(im_x, d);
  SpanBasis sss = row_span(im_ss, d);
  SpanBasis snb = row_span(nil_bracket, d);
  rep.dim_image_x = sx.dim();
  rep.dim_image_ss = sss.dim();
  rep.dim_nil_bracket = snb.dim();

  std::vector<RatVec> sum_vecs = im_ss;
  sum_vecs.insert(sum_vecs.end(), nil_bracket.begin(), nil_bracket.end());
  sum_vecs.insert(sum_vecs.end(), im_x.begin(), im_x.end());
  const bool dims_add = snb.dim() + sss.dim() == sx.dim();
  const bool spans_match = row_span(sum_vecs, d).dim() == sx.dim();

  rep.pass = centralizers_equal && dims_add && spans_match;
  std::ostringstream os;
  os << "dim g^x=" << rep.dim_centralizer_x << " nested=" << rep.dim_nested_centralizer
     << " dim[g,x]=" << rep.dim_image_x << " = " << rep.dim_nil_bracket << "+"
     << rep.dim_image_ss;
  rep.detail = os.str();
  return rep;
}

}  // namespace takiff
