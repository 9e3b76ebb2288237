#include "takiff/lie_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace takiff {

void SparseVec::add_to(RatVec& dense, const Rational& scale) const {
  for (const auto& [k, c] : entries) dense[k] += scale * c;
}

RatVec SparseVec::to_dense(std::size_t dim) const {
  RatVec v(dim, Rational(0));
  for (const auto& [k, c] : entries) v[k] = c;
  return v;
}

SparseVec SparseVec::from_dense(const RatVec& v) {
  SparseVec s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) s.entries.emplace_back(k, v[k]);
  return s;
}

SparseVec SparseVec::negated() const {
  SparseVec s = *this;
  for (auto& [k, c] : s.entries) c = -c;
  return s;
}

AlgebraPtr LieAlgebra::create(std::string name, std::vector<std::string> labels,
                              std::vector<BracketEntry> brackets, TableCheck check) {
  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->name_ = std::move(name);
  alg->labels_ = std::move(labels);
  alg->dim_ = alg->labels_.size();
  const std::size_t d = alg->dim_;
  alg->table_.assign(d * d, SparseVec{});

  for (auto& b : brackets) {
    if (b.i >= d || b.j >= d)
      throw std::invalid_argument("bracket index out of range in '" + alg->name_ + "'");
    if (b.i >= b.j) {
      std::ostringstream os;
      os << "bracket list must have i < j; got (" << b.i << "," << b.j << ")";
      throw std::invalid_argument(os.str());
    }
    std::sort(b.value.entries.begin(), b.value.entries.end(),
              [](const auto& a, const auto& c) { return a.first < c.first; });
    b.value.entries.erase(
        std::remove_if(b.value.entries.begin(), b.value.entries.end(),
                       [](const auto& e) { return is_zero(e.second); }),
        b.value.entries.end());
    for (const auto& [k, c] : b.value.entries)
      if (k >= d) throw std::invalid_argument("bracket coefficient index out of range");
    if (!alg->table_[b.i * d + b.j].empty()) {
      std::ostringstream os;
      os << "duplicate bracket entry (" << b.i << "," << b.j << ")";
      throw std::invalid_argument(os.str());
    }
    if (b.value.empty()) continue;
    alg->table_[b.i * d + b.j] = b.value;
    alg->table_[b.j * d + b.i] = b.value.negated();
    alg->brackets_.push_back(b);
  }

  if (check == TableCheck::Full) {
    // Jacobi: the cyclic sum [[e_i,e_j],e_k] vanishes for every triple.
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
          RatVec acc(d, Rational(0));
          auto add_term = [&](std::size_t a, std::size_t b, std::size_t c) {
            for (const auto& [idx, coeff] : alg->table_[a * d + b].entries)
              alg->table_[idx * d + c].add_to(acc, coeff);
          };
          add_term(i, j, k);
          add_term(j, k, i);
          add_term(k, i, j);
          if (!vec_is_zero(acc)) {
            std::ostringstream os;
            os << "Jacobi identity fails in '" << alg->name_ << "' at triple ("
               << alg->labels_[i] << "," << alg->labels_[j] << "," << alg->labels_[k] << ")";
            throw std::invalid_argument(os.str());
          }
        }
      }
    }
  }
  return alg;
}

std::optional<std::size_t> LieAlgebra::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

const SparseVec& LieAlgebra::product(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("basis index out of range");
  return table_[i * dim_ + j];
}

RatVec LieAlgebra::bracket_coords(const RatVec& x, const RatVec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("coordinate length mismatch");
  RatVec out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      const SparseVec& p = table_[i * dim_ + j];
      if (p.empty()) continue;
      p.add_to(out, Rational(x[i] * y[j]));
    }
  }
  return out;
}

Element make_element(AlgebraPtr algebra, RatVec coords) {
  if (coords.size() != algebra->dim())
    throw std::invalid_argument("coordinate length mismatch");
  return Element{std::move(algebra), std::move(coords)};
}

Element zero_element(AlgebraPtr algebra) {
  RatVec v(algebra->dim(), Rational(0));
  return Element{std::move(algebra), std::move(v)};
}

Element basis_element(AlgebraPtr algebra, std::size_t i) {
  RatVec v(algebra->dim(), Rational(0));
  v.at(i) = 1;
  return Element{std::move(algebra), std::move(v)};
}

Element bracket(const Element& x, const Element& y) {
  if (x.algebra != y.algebra)
    throw std::invalid_argument("bracket of elements from different algebras");
  return Element{x.algebra, x.algebra->bracket_coords(x.coords, y.coords)};
}

RatMatrix ad_matrix(const Element& x) {
  const LieAlgebra& g = *x.algebra;
  const std::size_t d = g.dim();
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(x.coords[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, c] : g.product(i, j).entries) m.at(k, j) += x.coords[i] * c;
    }
  }
  return m;
}

std::size_t centralizer_dim(const Element& x) {
  return x.algebra->dim() - rank(ad_matrix(x));
}

Subalgebra Subalgebra::from_span(AlgebraPtr parent, const std::vector<RatVec>& spanning) {
  Subalgebra sub;
  sub.parent_ = parent;
  sub.span_ = row_span(spanning, parent->dim());
  const std::size_t k = sub.span_.dim();

  std::vector<BracketEntry> induced;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      RatVec w = parent->bracket_coords(sub.span_.basis[i], sub.span_.basis[j]);
      auto coords = sub.span_.coordinates(w);
      if (!coords) {
        std::ostringstream os;
        os << "span is not closed under the bracket at basis pair (" << i << "," << j << ")";
        throw std::invalid_argument(os.str());
      }
      BracketEntry e;
      e.i = i;
      e.j = j;
      e.value = SparseVec::from_dense(*coords);
      if (!e.value.empty()) induced.push_back(std::move(e));
    }
  }
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = "u" + std::to_string(i);
  sub.induced_ = LieAlgebra::create("sub(" + parent->name() + ")", std::move(labels),
                                    std::move(induced), TableCheck::Trusted);
  return sub;
}

RatVec Subalgebra::coordinates(const RatVec& parent_coords) const {
  auto c = span_.coordinates(parent_coords);
  if (!c) throw std::invalid_argument("vector is not in the subalgebra");
  return *c;
}

RatVec Subalgebra::lift(const RatVec& sub_coords) const {
  if (sub_coords.size() != dim()) throw std::invalid_argument("coordinate length mismatch");
  RatVec out(parent_->dim(), Rational(0));
  for (std::size_t i = 0; i < sub_coords.size(); ++i) {
    if (is_zero(sub_coords[i])) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += sub_coords[i] * span_.basis[i][j];
  }
  return out;
}

Subalgebra centralizer(const Element& x) {
  return Subalgebra::from_span(x.algebra, kernel_basis(ad_matrix(x)));
}

std::size_t coadjoint_centralizer_dim(const LieAlgebra& h, const RatVec& phi) {
  if (phi.size() != h.dim()) throw std::invalid_argument("form length mismatch");
  const std::size_t d = h.dim();
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Rational v(0);
      for (const auto& [k, c] : h.product(i, j).entries) v += phi[k] * c;
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  }
  return d - rank(m);
}

std::size_t coadjoint_centralizer_dim(const Subalgebra& h, const RatVec& phi_on_basis) {
  return coadjoint_centralizer_dim(*h.induced(), phi_on_basis);
}

Rational form_pair(const QuadraticForm& k, const RatVec& x, const RatVec& y) {
  Rational acc(0);
  const std::size_t d = k.matrix.rows();
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(y[j]) || is_zero(k.matrix.at(i, j))) continue;
      acc += x[i] * k.matrix.at(i, j) * y[j];
    }
  }
  return acc;
}

RatVec form_apply(const QuadraticForm& k, const RatVec& x) {
  // K symmetric, so K(x, e_j) = (K x)_j.
  return k.matrix.apply(x);
}

RatMatrix restrict_form(const QuadraticForm& k, const Subalgebra& h) {
  const std::size_t n = h.dim();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec ki = form_apply(k, h.span().basis[i]);
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc(0);
      for (std::size_t a = 0; a < ki.size(); ++a) {
        if (!is_zero(ki[a]) && !is_zero(h.span().basis[j][a])) acc += ki[a] * h.span().basis[j][a];
      }
      m.at(i, j) = acc;
    }
  }
  return m;
}

RatVec restrict_linear_form(const RatVec& phi, const Subalgebra& h) {
  RatVec out(h.dim(), Rational(0));
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Rational acc(0);
    const RatVec& b = h.span().basis[i];
    for (std::size_t a = 0; a < b.size(); ++a)
      if (!is_zero(phi[a]) && !is_zero(b[a])) acc += phi[a] * b[a];
    out[i] = acc;
  }
  return out;
}

FormReport form_check(const LieAlgebra& g, const RatMatrix& k) {
  FormReport rep;
  const std::size_t d = g.dim();
  if (k.rows() != d || k.cols() != d) throw std::invalid_argument("form matrix shape mismatch");
  rep.symmetric = (k == k.transposed());
  rep.nondegenerate = (rank(k) == d);
  rep.invariant = true;
  for (std::size_t i = 0; i < d && rep.invariant; ++i) {
    for (std::size_t j = 0; j < d && rep.invariant; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        // K([e_i,e_j], e_l) vs K(e_i, [e_j,e_l])
        Rational lhs(0);
        for (const auto& [a, c] : g.product(i, j).entries) lhs += c * k.at(a, l);
        Rational rhs(0);
        for (const auto& [a, c] : g.product(j, l).entries) rhs += c * k.at(i, a);
        if (lhs != rhs) {
          rep.invariant = false;
          rep.violating_triple = {i, j, l};
          break;
        }
      }
    }
  }
  return rep;
}

std::variant<QuadraticForm, DegenerateReport> killing_form(const AlgebraPtr& g) {
  const std::size_t d = g->dim();
  std::vector<RatMatrix> ads(d);
  for (std::size_t i = 0; i < d; ++i) ads[i] = ad_matrix(basis_element(g, i));
  RatMatrix k(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Rational tr(0);
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          const Rational& x = ads[i].at(a, b);
          if (is_zero(x)) continue;
          const Rational& y = ads[j].at(b, a);
          if (!is_zero(y)) tr += x * y;
        }
      }
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  }
  const std::size_t r = rank(k);
  if (r == d) return QuadraticForm{g, std::move(k)};
  return DegenerateReport{d - r, std::move(k)};
}

bool is_abelian(const LieAlgebra& g) { return g.bracket_list().empty(); }

bool is_abelian(const Subalgebra& h) { return is_abelian(*h.induced()); }

PolyMatrix coadjoint_structure_matrix(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  PolyMatrix m(d, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      MultiPoly p(d);
      for (const auto& [k, c] : g.product(i, j).entries) {
        MultiPoly::Exponents e(d, 0);
        e[k] = 1;
        p.add_term(e, c);
      }
      if (p.is_zero()) continue;
      m.at(i, j) = p;
      m.at(j, i) = -p;
    }
  }
  return m;
}

IndexResult index(const LieAlgebra& g, const GenericRankOptions& opts) {
  auto res = generic_rank(coadjoint_structure_matrix(g), opts);
  return IndexResult{g.dim() - res.rank, res.method};
}

}  // namespace takiff
