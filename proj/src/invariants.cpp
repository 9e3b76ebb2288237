#include "takiff/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "takiff/jordan.hpp"
#include "takiff/rng.hpp"

namespace takiff {

std::uint64_t RunOptions::derive_seed_salted(std::uint64_t salt) const {
  return derive_seed(seed, 0x517cc1b727220a95ULL + salt);
}

std::string to_string(Certification c) {
  switch (c) {
    case Certification::CertifiedSymbolic: return "certified-symbolic";
    case Certification::CertifiedByBound: return "certified-by-bound";
    case Certification::UpperBoundOnly: return "upper-bound-only";
  }
  return "?";
}

std::string to_string(const ElementClass& c) {
  switch (c.kind) {
    case ElementClass::Regular: return "regular";
    case ElementClass::Subregular: return "subregular";
    case ElementClass::Other: break;
  }
  return "other(" + std::to_string(c.excess) + ")";
}

void Report::check(bool ok, std::string line) {
  lines.push_back(std::string(ok ? "[ok]   " : "[FAIL] ") + std::move(line));
  if (!ok) pass = false;
}

namespace {

struct ResolvedIndex {
  std::size_t chi = 0;
  bool exact = false;
};

ResolvedIndex resolve_index(const AlgebraPtr& g, std::optional<std::size_t> known,
                            const RunOptions& opts, std::uint64_t salt) {
  if (known) return {*known, true};
  IndexResult r = index(*g, opts.rank_options(salt));
  return {r.value, r.method == RankMethod::Symbolic};
}

Element degree_zero(const Jet& x) { return make_element(x.base, x.coeff(0)); }

}  // namespace

Jet random_jet(const AlgebraPtr& g, std::size_t support, long height, std::uint64_t seed) {
  std::vector<RatVec> coeffs;
  for (std::size_t k = 0; k < support; ++k)
    coeffs.push_back(random_int_vector(g->dim(), height, derive_seed(seed, k)));
  return make_jet(g, std::move(coeffs));
}

std::vector<std::size_t> centralizer_dim_sequence(const Jet& x, std::size_t cap) {
  std::vector<std::size_t> u;
  for (std::size_t m = 0; m <= cap; ++m) u.push_back(takiff_centralizer_dim(x, m));
  return u;
}

ConcavityReport check_sequence_concavity(const std::vector<std::size_t>& u) {
  ConcavityReport rep;
  rep.sequence = u;
  rep.pass = true;
  for (std::size_t m = 0; m + 2 < u.size(); ++m) {
    if (u[m + 2] + u[m] > 2 * u[m + 1]) {
      rep.pass = false;
      rep.first_violation = m;
      return rep;
    }
  }
  // Slope inequalities, implied by concavity but asserted independently:
  // (u_n - u_m)/(n - m) <= (u_n - u_l)/(n - l) <= (u_m - u_l)/(m - l).
  for (std::size_t l = 0; l < u.size(); ++l) {
    for (std::size_t m = l + 1; m < u.size(); ++m) {
      for (std::size_t n = m + 1; n < u.size(); ++n) {
        const long um = static_cast<long>(u[m]), ul = static_cast<long>(u[l]),
                   un = static_cast<long>(u[n]);
        const long nm = static_cast<long>(n - m), nl = static_cast<long>(n - l),
                   ml = static_cast<long>(m - l);
        if ((un - um) * nl > (un - ul) * nm || (un - ul) * ml > (um - ul) * nl) {
          rep.pass = false;
          rep.first_violation = l;
          return rep;
        }
      }
    }
  }
  return rep;
}

ConcavityReport concavity_check(const Jet& x, std::size_t cap) {
  return check_sequence_concavity(centralizer_dim_sequence(x, cap));
}

ElementClass classify(const Element& x0, std::size_t chi) {
  const std::size_t dim_cent = centralizer_dim(x0);
  if (dim_cent < chi) throw std::logic_error("centralizer below the index: bad chi?");
  ElementClass c;
  c.excess = dim_cent - chi;
  c.kind = c.excess == 0 ? ElementClass::Regular
                         : (c.excess == 2 ? ElementClass::Subregular : ElementClass::Other);
  return c;
}

ModalityResult modality(const ModalityQuery& q, const RunOptions& opts) {
  if (q.m > q.n) throw std::invalid_argument("modality needs m <= n");
  if (q.form.algebra != q.x.base)
    throw std::invalid_argument("form does not live on the jet's base algebra");
  const AlgebraPtr& g = q.x.base;
  const std::size_t d = g->dim();
  const std::size_t total = (q.n + 1) * d;

  ModalityResult res;
  res.seed = opts.seed;
  res.fixed_centralizer_dim = takiff_centralizer_dim(q.x, q.m);

  ResolvedIndex chi = resolve_index(g, q.known_index, opts, 1);
  res.base_index = chi.chi;
  res.index_exact = chi.exact;
  res.lower_bound = (q.n - q.m) * chi.chi;

  if (q.m == q.n) {
    res.value = 0;
    res.status = Certification::CertifiedSymbolic;
    res.lower_bound = 0;
    TakiffAlgebra gm(g, q.m);
    res.witness = embed(gm, project(q.x, gm));
    return res;
  }

  // Subregular degree-0 part with abelian centralizer caps the modality at
  // (n-m)(chi+2), and that cap is attained.
  bool subregular = false, abelian_cent = false;
  if (chi.exact) {
    Element x0 = degree_zero(q.x);
    subregular = centralizer_dim(x0) == chi.chi + 2;
    if (subregular) abelian_cent = is_abelian(centralizer(x0));
  }
  const std::size_t cap = (q.n - q.m) * (chi.chi + 2);

  // ad matrix of a generic extension: block (a, b) is ad(x_{a-b}) for
  // a-b <= m and an indeterminate block for larger degree gaps.
  const std::size_t nvars = (q.n - q.m) * d;
  PolyMatrix a(total, total, nvars);
  for (std::size_t deg = 0; deg <= q.n; ++deg) {
    if (deg <= q.m) {
      const RatVec xc = q.x.coeff(deg);
      if (vec_is_zero(xc)) continue;
      for (std::size_t i = 0; i < d; ++i) {
        if (is_zero(xc[i])) continue;
        for (std::size_t j = 0; j < d; ++j) {
          for (const auto& [k, c] : g->product(i, j).entries) {
            MultiPoly::Exponents e(nvars, 0);
            MultiPoly p(nvars);
            p.add_term(e, Rational(xc[i] * c));
            for (std::size_t b = 0; b + deg <= q.n; ++b)
              a.at((b + deg) * d + k, b * d + j) += p;
          }
        }
      }
    } else {
      const std::size_t var0 = (deg - q.m - 1) * d;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (const auto& [k, c] : g->product(i, j).entries) {
            MultiPoly::Exponents e(nvars, 0);
            e[var0 + i] = 1;
            MultiPoly p(nvars);
            p.add_term(e, c);
            for (std::size_t b = 0; b + deg <= q.n; ++b)
              a.at((b + deg) * d + k, b * d + j) += p;
          }
        }
      }
    }
  }

  GenericRankOptions ro = opts.rank_options(0);
  ro.want_witness_point = true;
  if (chi.exact) {
    const std::size_t stop_value = (subregular && abelian_cent) ? cap : res.lower_bound;
    ro.early_stop_rank = total - res.fixed_centralizer_dim - stop_value;
  }
  GenericRankResult gr = generic_rank(a, ro);
  res.samples_used = gr.samples_used;
  if (total < gr.rank + res.fixed_centralizer_dim)
    throw std::logic_error("generic rank exceeds the codimension of the fixed centralizer");
  res.value = total - gr.rank - res.fixed_centralizer_dim;

  if (gr.method == RankMethod::Symbolic) {
    res.status = Certification::CertifiedSymbolic;
  } else if (chi.exact && res.value == res.lower_bound) {
    res.status = Certification::CertifiedByBound;
  } else if (chi.exact && subregular && abelian_cent && res.value == cap) {
    res.status = Certification::CertifiedByBound;
  } else {
    res.status = Certification::UpperBoundOnly;
  }

  if (((res.value + (q.n - q.m) * d) % 2) != 0)
    throw std::logic_error("modality parity violated");

  if (gr.witness_point) {
    std::vector<RatVec> coeffs;
    for (std::size_t k = 0; k <= q.m; ++k) coeffs.push_back(q.x.coeff(k));
    for (std::size_t deg = q.m + 1; deg <= q.n; ++deg) {
      RatVec block(d, Rational(0));
      for (std::size_t i = 0; i < d; ++i) block[i] = (*gr.witness_point)[(deg - q.m - 1) * d + i];
      coeffs.push_back(std::move(block));
    }
    Jet witness = make_jet(g, std::move(coeffs));
    if (takiff_centralizer_dim(witness, q.n) != res.value + res.fixed_centralizer_dim)
      throw std::logic_error("witness re-evaluation mismatch");
    res.witness = std::move(witness);
  }
  return res;
}

Report verify_rais_tauvel(const AlgebraPtr& g, std::optional<std::size_t> known_index,
                          std::size_t m, std::size_t trials, const RunOptions& opts) {
  Report rep;
  rep.pass = true;
  rep.name = "rais-tauvel";
  ResolvedIndex chi = resolve_index(g, known_index, opts, 2);
  TakiffAlgebra tk(g, m);
  IndexResult chi_m = index(*tk.algebra(), opts.rank_options(3));
  {
    std::ostringstream os;
    os << "chi(" << g->name() << "_" << m << ") = " << chi_m.value << " = (m+1)*chi = "
       << (m + 1) * chi.chi;
    rep.check(chi_m.value == (m + 1) * chi.chi, os.str());
  }
  std::size_t regular_seen = 0, nonregular_seen = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Jet y = random_jet(g, m + 1, opts.height, derive_seed(opts.seed, 100 + t));
    if (t % 3 == 2 && !y.coeffs.empty()) {
      // force a non-generic degree-0 part
      y.coeffs[0] = RatVec(g->dim(), Rational(0));
      y = make_jet(g, y.coeffs);
    }
    const bool reg_m = takiff_centralizer_dim(y, m) == (m + 1) * chi.chi;
    const bool reg_0 = centralizer_dim(degree_zero(y)) == chi.chi;
    (reg_0 ? regular_seen : nonregular_seen)++;
    if (reg_m != reg_0) {
      std::ostringstream os;
      os << "trial " << t << ": regular in g_m = " << reg_m << " but x0 regular = " << reg_0;
      rep.check(false, os.str());
    }
  }
  {
    std::ostringstream os;
    os << trials << " sampled elements: regular iff x0 regular (" << regular_seen
       << " regular, " << nonregular_seen << " not)";
    rep.check(true, os.str());
  }
  return rep;
}

Report verify_lower_bound(const ModalityQuery& q, const RunOptions& opts) {
  Report rep;
  rep.pass = true;
  rep.name = "lower-bound";
  ModalityResult r = modality(q, opts);
  std::ostringstream os;
  os << "mod_{" << q.m << "," << q.n << "} = " << r.value << " >= " << r.lower_bound << " ("
     << to_string(r.status) << ")";
  rep.check(r.value >= r.lower_bound, os.str());
  return rep;
}

Report verify_heredity(const ModalityQuery& q, std::size_t n_prime, const RunOptions& opts) {
  Report rep;
  rep.pass = true;
  rep.name = "heredity";
  ModalityResult r1 = modality(q, opts);
  const std::size_t chi = r1.base_index;
  if (r1.status == Certification::UpperBoundOnly || r1.value != (q.n - q.m) * chi) {
    rep.check(false, "precondition: mod_{m,n} = (n-m)chi certified");
    return rep;
  }
  rep.check(true, "mod at (" + std::to_string(q.m) + "," + std::to_string(q.n) +
                      ") attains (n-m)chi, " + to_string(r1.status));

  ModalityQuery q2 = q;
  q2.n = n_prime;
  ModalityResult r2 = modality(q2, opts);
  {
    std::ostringstream os;
    os << "mod_{" << q.m << "," << n_prime << "} = " << r2.value << " expected "
       << (n_prime - q.m) * chi << " (" << to_string(r2.status) << ")";
    rep.check(r2.value == (n_prime - q.m) * chi &&
                  r2.status != Certification::UpperBoundOnly,
              os.str());
  }

  if (r1.witness) {
    const std::size_t top = std::max(q.n, n_prime);
    for (std::size_t mp = q.m; mp <= top; ++mp) {
      for (std::size_t np = mp; np <= top; ++np) {
        ModalityQuery qw{*r1.witness, q.form, mp, np, q.known_index};
        ModalityResult rw = modality(qw, opts);
        if (rw.value != (np - mp) * chi || rw.status == Certification::UpperBoundOnly) {
          std::ostringstream os;
          os << "witness at (" << mp << "," << np << ") = " << rw.value << " expected "
             << (np - mp) * chi;
          rep.check(false, os.str());
        }
      }
    }
    rep.check(true, "witness attains (n'-m')chi on all intermediate pairs");
  }
  return rep;
}

Report verify_subregular(const ModalityQuery& q,
                         const std::vector<std::pair<std::size_t, std::size_t>>& levels,
                         const RunOptions& opts) {
  Report rep;
  rep.pass = true;
  rep.name = "subregular";
  ResolvedIndex chi = resolve_index(q.x.base, q.known_index, opts, 4);
  Element x0 = degree_zero(q.x);
  ElementClass cls = classify(x0, chi.chi);
  if (cls.kind != ElementClass::Subregular) {
    rep.check(false, "precondition: x0 subregular, got " + to_string(cls));
    return rep;
  }
  const bool abelian = is_abelian(centralizer(x0));
  rep.check(true, std::string("x0 subregular, centralizer ") +
                      (abelian ? "abelian" : "not abelian"));
  for (auto [m, n] : levels) {
    ModalityQuery ql = q;
    ql.m = m;
    ql.n = n;
    ModalityResult r = modality(ql, opts);
    const std::size_t expect = (n - m) * (chi.chi + (abelian ? 2 : 0));
    std::ostringstream os;
    os << "mod_{" << m << "," << n << "} = " << r.value << " expected " << expect << " ("
       << to_string(r.status) << ")";
    rep.check(r.value == expect && r.status != Certification::UpperBoundOnly, os.str());
  }
  return rep;
}

Report verify_elashvili(const QuadraticForm& form, std::optional<std::size_t> known_index,
                        const Element& x0, const RunOptions& opts) {
  Report rep;
  rep.pass = true;
  rep.name = "elashvili";
  ResolvedIndex chi = resolve_index(x0.algebra, known_index, opts, 5);
  ModalityQuery q{jet_from_element(x0), form, 0, 1, known_index};
  ModalityResult r = modality(q, opts);
  Subalgebra cent = centralizer(x0);
  IndexResult chi_cent = index(*cent.induced(), opts.rank_options(6));
  std::ostringstream os;
  os << "mod_{0,1} = " << r.value << ", chi(g^x0) = " << chi_cent.value << ", chi(g) = "
     << chi.chi << " (" << to_string(r.status) << ")";
  rep.check(r.value == chi_cent.value && chi_cent.value == chi.chi &&
                r.status != Certification::UpperBoundOnly,
            os.str());
  return rep;
}

Report verify_shift(const ModalityQuery& q, std::size_t k, const RunOptions& opts) {
  Report rep;
  rep.pass = true;
  rep.name = "shift";
  if (k == 0) {
    rep.check(false, "shift needs k >= 1");
    return rep;
  }
  ModalityResult r1 = modality(q, opts);
  ModalityQuery q2{shift_jet(q.x, k), q.form, q.m + k, q.n + k, q.known_index};
  ModalityResult r2 = modality(q2, opts);
  std::ostringstream os;
  os << "mod_{" << q.m << "," << q.n << "} = " << r1.value << " (" << to_string(r1.status)
     << "), shifted mod_{" << q.m + k << "," << q.n + k << "} = " << r2.value << " ("
     << to_string(r2.status) << ")";
  rep.check(r1.value == r2.value && r1.status != Certification::UpperBoundOnly &&
                r2.status != Certification::UpperBoundOnly,
            os.str());

  // Shifted centralizer dimensions: dim g_{m+k}^{x'(m+k)} = dim g_m^{x(m)} + k d.
  const std::size_t lhs = takiff_centralizer_dim(q2.x, q.m + k);
  const std::size_t rhs = takiff_centralizer_dim(q.x, q.m) + k * q.x.base->dim();
  std::ostringstream os2;
  os2 << "shifted centralizer dim " << lhs << " = " << rhs;
  rep.check(lhs == rhs, os2.str());
  return rep;
}

Report verify_jordan_reduction(const ModalityQuery& q, const RunOptions& opts) {
  Report rep;
  rep.pass = true;
  rep.name = "jordan";
  const AlgebraPtr& g = q.x.base;
  Element x0 = degree_zero(q.x);
  JordanDecomposition jd = jordan_decompose(x0);

  Subalgebra cent_ss = centralizer(jd.semisimple);
  RatMatrix kr = restrict_form(q.form, cent_ss);
  {
    std::ostringstream os;
    os << "restricted form on g^{x_ss} (dim " << cent_ss.dim() << ") nondegenerate";
    rep.check(rank(kr) == cent_ss.dim(), os.str());
    if (!rep.pass) return rep;
  }

  std::vector<RatVec> v_span;
  RatMatrix ad_ss = ad_matrix(jd.semisimple);
  for (std::size_t j = 0; j < g->dim(); ++j) {
    RatVec c = ad_ss.col(j);
    if (!vec_is_zero(c)) v_span.push_back(std::move(c));
  }
  std::vector<RatVec> s_span;
  for (std::size_t i = 0; i < cent_ss.dim(); ++i) s_span.push_back(cent_ss.basis_vector(i));

  Jet sliced = v_span.empty() ? q.x : project_to_slice(q.x, q.n, v_span, s_span);
  if (q.n >= 1) {
    // The degree-1 coefficient is exactly the projection of x_1 onto
    // g^{x_ss} parallel to [g, x_ss] (the splitting is direct, so the
    // component is unique even though the spanning sets are redundant).
    const std::size_t d = g->dim();
    RatMatrix decomp(d, v_span.size() + s_span.size());
    for (std::size_t c = 0; c < v_span.size(); ++c)
      for (std::size_t r = 0; r < d; ++r) decomp.at(r, c) = v_span[c][r];
    for (std::size_t c = 0; c < s_span.size(); ++c)
      for (std::size_t r = 0; r < d; ++r) decomp.at(r, v_span.size() + c) = s_span[c][r];
    auto coords = solve(decomp, q.x.coeff(1));
    RatVec s_part(d, Rational(0));
    if (coords) {
      for (std::size_t c = 0; c < s_span.size(); ++c) {
        const Rational& w = (*coords)[v_span.size() + c];
        if (is_zero(w)) continue;
        for (std::size_t r = 0; r < d; ++r) s_part[r] += w * s_span[c][r];
      }
    }
    rep.check(coords.has_value() && sliced.coeff(1) == s_part,
              "sliced degree-1 coefficient is the projection of x_1 onto g^{x_ss}");
  }
  std::vector<RatVec> sub_coeffs;
  sub_coeffs.push_back(cent_ss.coordinates(jd.nilpotent.coords));
  for (std::size_t k = 1; k <= q.n; ++k) sub_coeffs.push_back(cent_ss.coordinates(sliced.coeff(k)));
  Jet reduced = make_jet(cent_ss.induced(), std::move(sub_coeffs));
  QuadraticForm sub_form{cent_ss.induced(), kr};

  ModalityResult direct = modality(q, opts);
  ModalityQuery qr{reduced, sub_form, q.m, q.n, std::nullopt};
  ModalityResult red = modality(qr, opts);
  {
    std::ostringstream os;
    os << "mod in g = " << direct.value << " (" << to_string(direct.status)
       << "), reduced mod in g^{x_ss} = " << red.value << " (" << to_string(red.status) << ")";
    rep.check(direct.value == red.value && direct.status != Certification::UpperBoundOnly &&
                  red.status != Certification::UpperBoundOnly,
              os.str());
  }

  if (vec_is_zero(jd.nilpotent.coords) && q.n >= 1) {
    ModalityQuery qc = q;
    qc.m = 1;
    ModalityResult rc = modality(qc, opts);
    std::ostringstream os;
    os << "semisimple x0: mod_{1," << q.n << "} = " << rc.value << " expected "
       << (q.n - 1) * rc.base_index;
    rep.check(rc.value == (q.n - 1) * rc.base_index &&
                  rc.status != Certification::UpperBoundOnly,
              os.str());
  }
  return rep;
}

Report verify_recursion(const QuadraticForm& form, std::size_t m, std::size_t trials,
                        long height, std::uint64_t seed) {
  Report rep;
  rep.pass = true;
  rep.name = "lemma22";
  std::size_t equal = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Jet x = random_jet(form.algebra, m + 1, height, derive_seed(seed, 3000 + t));
    auto [lhs, rhs] = recursion_lhs_rhs(x, m, form);
    if (lhs == rhs) {
      ++equal;
    } else {
      std::ostringstream os;
      os << "trial " << t << ": lhs " << lhs << " != rhs " << rhs;
      rep.check(false, os.str());
    }
  }
  rep.check(equal == trials, "recursion lhs = rhs on " + std::to_string(equal) + "/" +
                                 std::to_string(trials) + " jets at m = " + std::to_string(m));
  return rep;
}

Report verify_m1(const QuadraticForm& form, std::size_t trials, long height,
                 std::uint64_t seed) {
  Report rep;
  rep.pass = true;
  rep.name = "lemma25";
  std::size_t equal = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    RatVec c0 = random_int_vector(form.algebra->dim(), height, derive_seed(seed, 4000 + t));
    RatVec c1 = random_int_vector(form.algebra->dim(), height, derive_seed(seed, 5000 + t));
    Element x0 = make_element(form.algebra, std::move(c0));
    Element x1 = make_element(form.algebra, std::move(c1));
    auto [lhs, rhs] = m1_formula(x0, x1, form);
    const std::size_t capped = 2 * centralizer_dim(x0);
    if (lhs == rhs && lhs <= capped) {
      ++equal;
    } else {
      std::ostringstream os;
      os << "trial " << t << ": lhs " << lhs << " rhs " << rhs << " cap " << capped;
      rep.check(false, os.str());
    }
  }
  rep.check(equal == trials, "level-1 formula holds on " + std::to_string(equal) + "/" +
                                 std::to_string(trials) + " pairs");
  return rep;
}

Report verify_duality(const QuadraticForm& form, std::size_t m, std::size_t trials,
                      long height, std::uint64_t seed) {
  Report rep;
  rep.pass = true;
  rep.name = "duality";
  TakiffAlgebra gm(form.algebra, m);
  QuadraticForm ext = extend_form(gm, form);
  std::size_t equal = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Jet x = random_jet(form.algebra, m + 1, height, derive_seed(seed, 6000 + t));
    RatVec lhs = duality_vector(x, gm, form);
    RatVec rhs = form_apply(ext, project(x, gm).coords);
    if (lhs == rhs) {
      ++equal;
    } else {
      rep.check(false, "trial " + std::to_string(t) + ": dual vector mismatch");
    }
  }
  rep.check(equal == trials, "K(x(m),.) matches the degreewise dual on " +
                                 std::to_string(equal) + "/" + std::to_string(trials) + " jets");
  return rep;
}

Report verify_concavity(const AlgebraPtr& g, std::size_t cap, std::size_t trials,
                        long height, std::uint64_t seed) {
  Report rep;
  rep.pass = true;
  rep.name = "concavity";
  std::size_t good = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Jet x = random_jet(g, cap + 1, height, derive_seed(seed, 7000 + t));
    ConcavityReport c = concavity_check(x, cap);
    if (c.pass) {
      ++good;
    } else {
      std::ostringstream os;
      os << "trial " << t << ": violation at m = " << *c.first_violation;
      rep.check(false, os.str());
    }
  }
  rep.check(good == trials, "concave centralizer-dimension sequences on " +
                                std::to_string(good) + "/" + std::to_string(trials) + " jets");
  return rep;
}

}  // namespace takiff
