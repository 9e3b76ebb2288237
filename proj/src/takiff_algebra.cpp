#include "takiff/takiff_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace takiff {

TakiffAlgebra::TakiffAlgebra(AlgebraPtr base, std::size_t level)
    : base_(std::move(base)), level_(level) {
  const std::size_t d = base_->dim();
  const std::size_t dim = (level + 1) * d;
  std::vector<std::string> labels(dim);
  for (std::size_t a = 0; a <= level; ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      labels[a * d + i] =
          a == 0 ? base_->labels()[i] : base_->labels()[i] + "@" + std::to_string(a);
    }
  }
  std::vector<BracketEntry> brackets;
  for (std::size_t p = 0; p < dim; ++p) {
    const std::size_t a = p / d, i = p % d;
    for (std::size_t q = p + 1; q < dim; ++q) {
      const std::size_t b = q / d, j = q % d;
      if (a + b > level) continue;
      const SparseVec& prod = base_->product(i, j);
      if (prod.empty()) continue;
      BracketEntry e;
      e.i = p;
      e.j = q;
      for (const auto& [k, c] : prod.entries) e.value.entries.emplace_back((a + b) * d + k, c);
      brackets.push_back(std::move(e));
    }
  }
  std::ostringstream name;
  name << "takiff(" << base_->name() << "," << level << ")";
  algebra_ = LieAlgebra::create(name.str(), std::move(labels), std::move(brackets),
                                TableCheck::Trusted);
}

RatVec Jet::coeff(std::size_t k) const {
  if (k < coeffs.size()) return coeffs[k];
  return RatVec(base->dim(), Rational(0));
}

Jet make_jet(AlgebraPtr base, std::vector<RatVec> coeffs) {
  for (const auto& c : coeffs)
    if (c.size() != base->dim()) throw std::invalid_argument("jet coefficient length mismatch");
  while (!coeffs.empty() && vec_is_zero(coeffs.back())) coeffs.pop_back();
  return Jet{std::move(base), std::move(coeffs)};
}

Jet jet_from_element(const Element& x) { return make_jet(x.algebra, {x.coords}); }

Element project(const Jet& x, const TakiffAlgebra& gm) {
  if (x.base != gm.base()) throw std::invalid_argument("jet base does not match Takiff base");
  const std::size_t d = x.base->dim();
  RatVec coords((gm.level() + 1) * d, Rational(0));
  for (std::size_t a = 0; a <= gm.level() && a < x.coeffs.size(); ++a)
    for (std::size_t i = 0; i < d; ++i) coords[a * d + i] = x.coeffs[a][i];
  return make_element(gm.algebra(), std::move(coords));
}

Jet embed(const TakiffAlgebra& gm, const Element& v) {
  if (v.algebra != gm.algebra()) throw std::invalid_argument("element does not live in g_m");
  const std::size_t d = gm.base()->dim();
  std::vector<RatVec> coeffs(gm.level() + 1, RatVec(d, Rational(0)));
  for (std::size_t a = 0; a <= gm.level(); ++a)
    for (std::size_t i = 0; i < d; ++i) coeffs[a][i] = v.coords[a * d + i];
  return make_jet(gm.base(), std::move(coeffs));
}

Jet jet_bracket(const Jet& x, const Jet& y) {
  if (x.base != y.base) throw std::invalid_argument("jets over different algebras");
  if (x.coeffs.empty() || y.coeffs.empty()) return make_jet(x.base, {});
  const std::size_t top = x.coeffs.size() + y.coeffs.size() - 2;
  std::vector<RatVec> out(top + 1, RatVec(x.base->dim(), Rational(0)));
  for (std::size_t a = 0; a < x.coeffs.size(); ++a) {
    if (vec_is_zero(x.coeffs[a])) continue;
    for (std::size_t b = 0; b < y.coeffs.size(); ++b) {
      if (vec_is_zero(y.coeffs[b])) continue;
      RatVec z = x.base->bracket_coords(x.coeffs[a], y.coeffs[b]);
      out[a + b] = vec_add(out[a + b], z);
    }
  }
  return make_jet(x.base, std::move(out));
}

Jet jet_add(const Jet& x, const Jet& y) {
  if (x.base != y.base) throw std::invalid_argument("jets over different algebras");
  std::vector<RatVec> out(std::max(x.coeffs.size(), y.coeffs.size()),
                          RatVec(x.base->dim(), Rational(0)));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = vec_add(x.coeff(k), y.coeff(k));
  return make_jet(x.base, std::move(out));
}

Jet shift_jet(const Jet& x, std::size_t k) {
  std::vector<RatVec> out;
  out.reserve(x.coeffs.size() + k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(RatVec(x.base->dim(), Rational(0)));
  for (const auto& c : x.coeffs) out.push_back(c);
  return make_jet(x.base, std::move(out));
}

RatMatrix takiff_ad_matrix(const Jet& x, std::size_t m) {
  const LieAlgebra& g = *x.base;
  const std::size_t d = g.dim();
  RatMatrix out((m + 1) * d, (m + 1) * d);
  for (std::size_t deg = 0; deg <= m && deg < x.coeffs.size(); ++deg) {
    const RatVec& xc = x.coeffs[deg];
    if (vec_is_zero(xc)) continue;
    // block (b+deg, b) = ad(x_deg) for every column degree b
    for (std::size_t i = 0; i < d; ++i) {
      if (is_zero(xc[i])) continue;
      for (std::size_t j = 0; j < d; ++j) {
        for (const auto& [k, c] : g.product(i, j).entries) {
          Rational v = xc[i] * c;
          for (std::size_t b = 0; b + deg <= m; ++b)
            out.at((b + deg) * d + k, b * d + j) += v;
        }
      }
    }
  }
  return out;
}

std::size_t takiff_centralizer_dim(const Jet& x, std::size_t m) {
  return (m + 1) * x.base->dim() - rank(takiff_ad_matrix(x, m));
}

QuadraticForm extend_form(const TakiffAlgebra& gm, const QuadraticForm& base_form) {
  if (base_form.algebra != gm.base())
    throw std::invalid_argument("form does not live on the Takiff base");
  const std::size_t d = gm.base()->dim();
  const std::size_t m = gm.level();
  RatMatrix k((m + 1) * d, (m + 1) * d);
  for (std::size_t a = 0; a <= m; ++a) {
    const std::size_t b = m - a;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) k.at(a * d + i, b * d + j) = base_form.matrix.at(i, j);
  }
  return QuadraticForm{gm.algebra(), std::move(k)};
}

RatVec duality_vector(const Jet& x, const TakiffAlgebra& gm, const QuadraticForm& base_form) {
  if (x.base != gm.base()) throw std::invalid_argument("jet base does not match Takiff base");
  const std::size_t d = gm.base()->dim();
  const std::size_t m = gm.level();
  RatVec out((m + 1) * d, Rational(0));
  for (std::size_t a = 0; a <= m; ++a) {
    RatVec block = form_apply(base_form, x.coeff(m - a));
    for (std::size_t i = 0; i < d; ++i) out[a * d + i] = block[i];
  }
  return out;
}

namespace {

// x'_i = (i+1) x_{i+1}
Jet derived_jet(const Jet& x) {
  std::vector<RatVec> out;
  for (std::size_t i = 1; i < x.coeffs.size(); ++i)
    out.push_back(vec_scale(x.coeffs[i], Rational(static_cast<long>(i))));
  return make_jet(x.base, std::move(out));
}

}  // namespace

std::pair<std::size_t, std::size_t> recursion_lhs_rhs(const Jet& x, std::size_t m,
                                                      const QuadraticForm& base_form) {
  if (m < 2) throw std::invalid_argument("recursion needs m >= 2");
  const std::size_t lhs = takiff_centralizer_dim(x, m);

  TakiffAlgebra gm1(x.base, m - 1);
  Subalgebra cent = Subalgebra::from_span(gm1.algebra(),
                                          kernel_basis(takiff_ad_matrix(x, m - 1)));
  RatVec phi = duality_vector(derived_jet(x), gm1, base_form);
  const std::size_t middle = coadjoint_centralizer_dim(cent, restrict_linear_form(phi, cent));
  const std::size_t u_m1 = cent.dim();
  const std::size_t u_m2 = takiff_centralizer_dim(x, m - 2);
  return {lhs, u_m1 + middle - u_m2};
}

std::pair<std::size_t, std::size_t> m1_formula(const Element& x0, const Element& x1,
                                               const QuadraticForm& base_form) {
  if (x0.algebra != x1.algebra) throw std::invalid_argument("elements from different algebras");
  Jet x = make_jet(x0.algebra, {x0.coords, x1.coords});
  const std::size_t lhs = takiff_centralizer_dim(x, 1);
  Subalgebra cent = centralizer(x0);
  RatVec phi = restrict_linear_form(form_apply(base_form, x1.coords), cent);
  const std::size_t rhs = cent.dim() + coadjoint_centralizer_dim(cent, phi);
  return {lhs, rhs};
}

RatMatrix elementary_automorphism(const Element& y, std::size_t l, const TakiffAlgebra& gm) {
  if (l == 0)
    throw std::invalid_argument("elementary automorphism needs degree l >= 1 "
                                "(exp is polynomial only then)");
  if (y.algebra != gm.base()) throw std::invalid_argument("element does not live in the base");
  const std::size_t m = gm.level();
  const std::size_t dim = gm.dim();
  Jet yjet = shift_jet(jet_from_element(y), l);
  RatMatrix n = takiff_ad_matrix(yjet, m);
  RatMatrix acc = RatMatrix::identity(dim);
  RatMatrix power = RatMatrix::identity(dim);
  Rational factorial(1);
  for (std::size_t j = 1; j * l <= m; ++j) {
    power = power * n;
    factorial *= Rational(static_cast<long>(j));
    RatMatrix term = power;
    term.scale(Rational(1) / factorial);
    acc = acc + term;
  }
  return acc;
}

Jet project_to_slice(const Jet& x, std::size_t m, const std::vector<RatVec>& v_span,
                     const std::vector<RatVec>& s_span) {
  const AlgebraPtr& g = x.base;
  const std::size_t d = g->dim();
  if (x.coeffs.empty()) return x;

  RatMatrix ad0 = ad_matrix(make_element(g, x.coeff(0)));
  std::vector<RatVec> ad0_cols;
  for (std::size_t j = 0; j < d; ++j) ad0_cols.push_back(ad0.col(j));
  SpanBasis image0 = row_span(ad0_cols, d);
  for (const auto& v : v_span)
    if (!image0.contains(v))
      throw std::invalid_argument("V is not contained in [g, x_0]");
  std::vector<RatVec> all = v_span;
  all.insert(all.end(), s_span.begin(), s_span.end());
  if (row_span(all, d).dim() != d)
    throw std::invalid_argument("V + S does not span the algebra");
  SpanBasis s_basis = row_span(s_span, d);

  // Columns = V vectors then S vectors; canonical decomposition w = v + s.
  RatMatrix decomp(d, v_span.size() + s_span.size());
  for (std::size_t c = 0; c < v_span.size(); ++c)
    for (std::size_t r = 0; r < d; ++r) decomp.at(r, c) = v_span[c][r];
  for (std::size_t c = 0; c < s_span.size(); ++c)
    for (std::size_t r = 0; r < d; ++r) decomp.at(r, v_span.size() + c) = s_span[c][r];

  TakiffAlgebra gm(g, m);
  Jet cur = x;
  for (std::size_t l = 0; l + 1 <= m; ++l) {
    RatVec w = cur.coeff(l + 1);
    if (s_basis.contains(w)) continue;
    auto coords = solve(decomp, w);
    if (!coords) throw std::logic_error("decomposition V + S failed");
    RatVec v(d, Rational(0));
    for (std::size_t c = 0; c < v_span.size(); ++c) {
      if (is_zero((*coords)[c])) continue;
      for (std::size_t r = 0; r < d; ++r) v[r] += (*coords)[c] * v_span[c][r];
    }
    if (vec_is_zero(v)) continue;
    // [x_0, y] = v, so exp(ad(y (x) T^{l+1})) subtracts v at degree l+1.
    auto y = solve(ad0, v);
    if (!y) throw std::logic_error("V vector escaped [g, x_0]");
    RatMatrix aut = elementary_automorphism(make_element(g, *y), l + 1, gm);
    Element moved = make_element(gm.algebra(), aut.apply(project(cur, gm).coords));
    cur = embed(gm, moved);
  }
  return cur;
}

}  // namespace takiff
