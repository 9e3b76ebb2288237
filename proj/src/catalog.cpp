#include "takiff/catalog.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace takiff {

namespace {

RatMatrix identity_form(std::size_t d) { return RatMatrix::identity(d); }

// --- G2 root system -------------------------------------------------------
//
// Roots are integer pairs (a, b) = a*alpha + b*beta with alpha short and
// beta long. Inner product normalized so (alpha,alpha) = 2, (beta,beta) = 6,
// (alpha,beta) = -3. Positive roots in height order.

struct Root {
  int a = 0, b = 0;
  bool operator==(const Root& r) const { return a == r.a && b == r.b; }
  Root operator+(const Root& r) const { return {a + r.a, b + r.b}; }
  Root operator-(const Root& r) const { return {a - r.a, b - r.b}; }
  Root operator-() const { return {-a, -b}; }
};

constexpr std::array<Root, 6> kPositive = {{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}};

long ip(const Root& r, const Root& s) {
  return 2L * r.a * s.a + 6L * r.b * s.b - 3L * (static_cast<long>(r.a) * s.b + static_cast<long>(r.b) * s.a);
}

bool is_positive(const Root& r) {
  for (const auto& p : kPositive)
    if (r == p) return true;
  return false;
}

bool is_root(const Root& r) { return is_positive(r) || is_positive(-r); }

// Largest p with s - p*r still a root.
long p_value(const Root& r, const Root& s) {
  long p = 0;
  Root cur = s - r;
  while (is_root(cur)) {
    ++p;
    cur = cur - r;
  }
  return p;
}

// Structure constants on pairs of positive roots. Extraspecial pairs get the
// chosen sign +1; the one remaining special pair (alpha+beta, 2alpha+beta)
// carries the free sign sigma, which the Jacobi validation pins down.
class G2Constants {
 public:
  explicit G2Constants(int sigma) {
    auto set = [&](Root r, Root s, long n) {
      table_[key(r, s)] = Rational(n);
      table_[key(s, r)] = Rational(-n);
    };
    const Root al{1, 0}, be{0, 1};
    set(al, be, p_value(al, be) + 1);
    set(al, Root{1, 1}, p_value(al, Root{1, 1}) + 1);
    set(al, Root{2, 1}, p_value(al, Root{2, 1}) + 1);
    set(be, Root{3, 1}, p_value(be, Root{3, 1}) + 1);
    set(Root{1, 1}, Root{2, 1}, sigma * (p_value(Root{1, 1}, Root{2, 1}) + 1));
  }

  // N_{r,s} for arbitrary roots with r+s a root.
  Rational n(const Root& r, const Root& s) const {
    if (is_positive(r) && is_positive(s)) {
      auto it = table_.find(key(r, s));
      if (it == table_.end()) throw std::logic_error("missing positive structure constant");
      return it->second;
    }
    if (!is_positive(r) && !is_positive(s)) return -n(-r, -s);
    if (!is_positive(r)) return -n(s, r);
    // r positive, s negative
    const Root v = -s;
    const Root sum = r + s;
    if (is_positive(sum)) {
      // N_{r,-v} = N_{r-v, v} * (r-v, r-v) / (r, r)
      Rational base = n(sum, v);
      return base * Rational(ip(sum, sum)) / Rational(ip(r, r));
    }
    // N_{r,-v} = N_{v,-r}, and v - r is positive
    Rational base = n(v - r, r);
    return base * Rational(ip(v - r, v - r)) / Rational(ip(v, v));
  }

 private:
  static long key(const Root& r, const Root& s) {
    return (((r.a + 4) * 8 + (r.b + 4)) * 8 + (s.a + 4)) * 8 + (s.b + 4);
  }
  std::map<long, Rational> table_;
};

std::string root_label(const Root& r) {
  // (a,b) = b*beta + a*alpha; labels read beta-first: e_beta_3a, e_2beta_3a.
  const bool neg = !is_positive(r);
  const Root p = neg ? -r : r;
  std::string body;
  if (p == Root{1, 0}) body = "alpha";
  else if (p == Root{0, 1}) body = "beta";
  else if (p.b == 1) body = "beta_" + std::to_string(p.a) + "a";
  else body = std::to_string(p.b) + "beta_" + std::to_string(p.a) + "a";
  if (p == Root{1, 1}) body = "beta_a";
  return std::string("e_") + (neg ? "m" : "") + body;
}

AlgebraPtr build_g2(int sigma) {
  std::vector<Root> roots;
  for (const auto& p : kPositive) roots.push_back(p);
  for (const auto& p : kPositive) roots.push_back(-p);

  std::vector<std::string> labels = {"h_alpha", "h_beta"};
  for (const auto& r : roots) labels.push_back(root_label(r));

  G2Constants consts(sigma);
  const std::size_t nroots = roots.size();
  auto root_index = [&](const Root& r) -> std::size_t {
    for (std::size_t i = 0; i < nroots; ++i)
      if (roots[i] == r) return 2 + i;
    throw std::logic_error("root lookup failed");
  };

  std::vector<BracketEntry> brackets;
  // [h_i, e_gamma] = <gamma, alpha_i^vee> e_gamma
  for (std::size_t ri = 0; ri < nroots; ++ri) {
    const Root& g = roots[ri];
    long pair_alpha = ip(g, Root{1, 0});      // <gamma, alpha^vee>
    long pair_beta = ip(g, Root{0, 1}) / 3;   // <gamma, beta^vee>
    if (pair_alpha != 0)
      brackets.push_back({0, 2 + ri, SparseVec{{{2 + ri, Rational(pair_alpha)}}}});
    if (pair_beta != 0)
      brackets.push_back({1, 2 + ri, SparseVec{{{2 + ri, Rational(pair_beta)}}}});
  }
  // [e_gamma, e_delta]
  for (std::size_t ri = 0; ri < nroots; ++ri) {
    for (std::size_t si = ri + 1; si < nroots; ++si) {
      const Root& g = roots[ri];
      const Root& d = roots[si];
      const Root sum = g + d;
      SparseVec value;
      if (sum == Root{0, 0}) {
        // [e_gamma, e_{-gamma}] = gamma^vee expanded in simple coroots
        Rational ca = Rational(2L * g.a) / Rational(ip(g, g));
        Rational cb = Rational(6L * g.b) / Rational(ip(g, g));
        if (!is_zero(ca)) value.entries.emplace_back(0, ca);
        if (!is_zero(cb)) value.entries.emplace_back(1, cb);
      } else if (is_root(sum)) {
        Rational c = consts.n(g, d);
        if (c.get_den() != 1) throw std::logic_error("non-integral structure constant");
        value.entries.emplace_back(root_index(sum), c);
      } else {
        continue;
      }
      if (!value.entries.empty()) brackets.push_back({2 + ri, 2 + si, std::move(value)});
    }
  }
  return LieAlgebra::create("g2", std::move(labels), std::move(brackets), TableCheck::Full);
}

}  // namespace

CatalogEntry make_abelian(std::size_t d) {
  if (d == 0 || d > 64) throw std::invalid_argument("abelian dimension out of range");
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < d; ++i) labels[i] = "x" + std::to_string(i + 1);
  std::string id = "abelian_" + std::to_string(d);
  AlgebraPtr alg = LieAlgebra::create(id, std::move(labels), {});
  CatalogEntry e;
  e.id = id;
  e.algebra = alg;
  e.form = QuadraticForm{alg, identity_form(d)};
  e.known_index = d;
  e.note = "abelian; any nondegenerate symmetric form is invariant";
  return e;
}

CatalogEntry make_sl(std::size_t n) {
  if (n < 2 || n > 9) throw std::invalid_argument("sl(n) supported for 2 <= n <= 9");
  // Basis: E_ij (i<j), H_k = E_kk - E_{k+1,k+1}, E_ij (i>j).
  struct BasisMat {
    std::string label;
    RatMatrix mat;
  };
  std::vector<BasisMat> basis;
  auto eij = [&](std::size_t i, std::size_t j) {
    RatMatrix m(n, n);
    m.at(i, j) = 1;
    return m;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      basis.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1), eij(i, j)});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    RatMatrix m(n, n);
    m.at(k, k) = 1;
    m.at(k + 1, k + 1) = -1;
    basis.push_back({"h" + std::to_string(k + 1), std::move(m)});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      basis.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1), eij(i, j)});
  if (n == 2) {
    basis[0].label = "e";
    basis[1].label = "h";
    basis[2].label = "f";
  }
  const std::size_t d = basis.size();

  // Decompose a traceless matrix against the basis: off-diagonal entries read
  // directly, the diagonal in prefix sums against the H_k.
  auto decompose = [&](const RatMatrix& m) {
    RatVec coords(d, Rational(0));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) coords[idx++] = m.at(i, j);
    Rational prefix(0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      prefix += m.at(k, k);
      coords[idx++] = prefix;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) coords[idx++] = m.at(i, j);
    return coords;
  };

  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(b.label);
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      RatMatrix comm = basis[i].mat * basis[j].mat - basis[j].mat * basis[i].mat;
      SparseVec v = SparseVec::from_dense(decompose(comm));
      if (!v.empty()) brackets.push_back({i, j, std::move(v)});
    }
  }
  std::string id = "sl" + std::to_string(n);
  AlgebraPtr alg = LieAlgebra::create(id, std::move(labels), std::move(brackets));

  RatMatrix form(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      RatMatrix prod = basis[i].mat * basis[j].mat;
      Rational tr(0);
      for (std::size_t k = 0; k < n; ++k) tr += prod.at(k, k);
      form.at(i, j) = tr;
    }

  CatalogEntry e;
  e.id = id;
  e.algebra = alg;
  e.form = QuadraticForm{alg, std::move(form)};
  e.known_index = n - 1;
  e.note = "trace form; Killing form = 2n * trace form on sl(n)";
  return e;
}

CatalogEntry make_g2() {
  // The extraspecial-pair signs are +1; the one remaining special-pair sign
  // is whichever of the two candidates satisfies the Jacobi identity.
  AlgebraPtr alg;
  std::string sigma_note;
  for (int sigma : {1, -1}) {
    try {
      alg = build_g2(sigma);
      sigma_note = sigma > 0 ? "+1" : "-1";
      break;
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  if (!alg) throw std::logic_error("no consistent sign choice for the g2 table");
  auto kf = killing_form(alg);
  if (!std::holds_alternative<QuadraticForm>(kf))
    throw std::logic_error("g2 Killing form is degenerate");
  CatalogEntry e;
  e.id = "g2";
  e.algebra = alg;
  e.form = std::get<QuadraticForm>(std::move(kf));
  e.known_index = 2;
  e.note = "Chevalley basis from the root system; extraspecial signs +1, "
           "sign of N(beta_a, beta_2a) = " + sigma_note + " fixed by Jacobi";
  return e;
}

CatalogEntry make_nilpotent_n() {
  std::vector<std::string> labels = {"a1", "a2", "a3", "b1", "b2", "b3"};
  // Alternating signs ([a1,a3] = -b2) are what make the couplings
  // K(a_i,b_i) = 1 an invariant form.
  std::vector<BracketEntry> brackets = {
      {0, 1, SparseVec{{{5, Rational(1)}}}},   // [a1,a2] = b3
      {0, 2, SparseVec{{{4, Rational(-1)}}}},  // [a1,a3] = -b2
      {1, 2, SparseVec{{{3, Rational(1)}}}},   // [a2,a3] = b1
  };
  AlgebraPtr alg = LieAlgebra::create("nilpotent_n", std::move(labels), std::move(brackets));
  RatMatrix form(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    form.at(i, 3 + i) = 1;
    form.at(3 + i, i) = 1;
  }
  CatalogEntry e;
  e.id = "nilpotent_n";
  e.algebra = alg;
  e.form = QuadraticForm{alg, std::move(form)};
  e.known_index = 4;
  e.note = "nilpotent quadratic algebra, couplings K(a_i,b_i)=1";
  return e;
}

CatalogEntry make_solvable_s() {
  std::vector<std::string> labels = {"a1", "a2", "a3", "b"};
  std::vector<BracketEntry> brackets = {
      {0, 1, SparseVec{{{2, Rational(1)}}}},   // [a1,a2] = a3
      {0, 2, SparseVec{{{1, Rational(-1)}}}},  // [a1,a3] = -a2
      {1, 2, SparseVec{{{3, Rational(1)}}}},   // [a2,a3] = b
  };
  AlgebraPtr alg = LieAlgebra::create("solvable_s", std::move(labels), std::move(brackets));
  RatMatrix form(4, 4);
  form.at(0, 3) = 1;
  form.at(3, 0) = 1;
  form.at(1, 1) = 1;
  form.at(2, 2) = 1;
  CatalogEntry e;
  e.id = "solvable_s";
  e.algebra = alg;
  e.form = QuadraticForm{alg, std::move(form)};
  e.known_index = 2;
  e.note = "solvable non-nilpotent quadratic algebra";
  return e;
}

CatalogEntry make_product(const CatalogEntry& a, const CatalogEntry& b) {
  const std::size_t da = a.algebra->dim(), db = b.algebra->dim();
  std::vector<std::string> labels;
  for (const auto& l : a.algebra->labels()) labels.push_back(a.id + "." + l);
  for (const auto& l : b.algebra->labels()) labels.push_back(b.id + "." + l);
  std::vector<BracketEntry> brackets;
  for (const auto& e : a.algebra->bracket_list()) brackets.push_back(e);
  for (const auto& e : b.algebra->bracket_list()) {
    BracketEntry shifted;
    shifted.i = e.i + da;
    shifted.j = e.j + da;
    for (const auto& [k, c] : e.value.entries) shifted.value.entries.emplace_back(k + da, c);
    brackets.push_back(std::move(shifted));
  }
  std::string id = "product(" + a.id + "," + b.id + ")";
  AlgebraPtr alg = LieAlgebra::create(id, std::move(labels), std::move(brackets));
  CatalogEntry out;
  out.id = id;
  out.algebra = alg;
  if (a.form && b.form) {
    RatMatrix k(da + db, da + db);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) k.at(i, j) = a.form->matrix.at(i, j);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) k.at(da + i, da + j) = b.form->matrix.at(i, j);
    out.form = QuadraticForm{alg, std::move(k)};
  }
  if (a.known_index && b.known_index) out.known_index = *a.known_index + *b.known_index;
  out.note = "direct product";
  return out;
}

CatalogEntry make_semidirect_double(const CatalogEntry& g) {
  const std::size_t d = g.algebra->dim();
  std::vector<std::string> labels = g.algebra->labels();
  for (const auto& l : g.algebra->labels()) labels.push_back(l + "*");
  std::vector<BracketEntry> brackets;
  for (const auto& e : g.algebra->bracket_list()) brackets.push_back(e);
  // [x_i, f_j] = -sum_k c_{ik}^j f_k (coadjoint action); [f, f] = 0.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SparseVec value;
      for (std::size_t k = 0; k < d; ++k) {
        for (const auto& [idx, c] : g.algebra->product(i, k).entries) {
          if (idx == j) value.entries.emplace_back(d + k, Rational(-c));
        }
      }
      if (!value.empty()) brackets.push_back({i, d + j, std::move(value)});
    }
  }
  std::string id = "double_" + g.id;
  AlgebraPtr alg = LieAlgebra::create(id, std::move(labels), std::move(brackets));
  RatMatrix k(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    k.at(i, d + i) = 1;
    k.at(d + i, i) = 1;
  }
  CatalogEntry out;
  out.id = id;
  out.algebra = alg;
  out.form = QuadraticForm{alg, std::move(k)};
  out.note = "semidirect product with the coadjoint module, K(x+a,y+b)=a(y)+b(x)";
  return out;
}

CatalogEntry make_takiff_entry(const CatalogEntry& base, std::size_t m) {
  TakiffAlgebra tk(base.algebra, m);
  CatalogEntry e;
  e.id = base.id + "#" + std::to_string(m);
  e.algebra = tk.algebra();
  if (base.form) e.form = extend_form(tk, *base.form);
  if (base.known_index) e.known_index = (m + 1) * *base.known_index;
  e.note = "takiff level " + std::to_string(m) + " over " + base.id;
  return e;
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {"abelian_3",   "sl2",        "sl3", "g2",
                                               "nilpotent_n", "solvable_s", "double_sl2"};
  return ids;
}

CatalogEntry catalog_get(const std::string& id) {
  auto hash = id.find('#');
  if (hash != std::string::npos) {
    std::string base = id.substr(0, hash);
    std::size_t m = 0;
    try {
      m = std::stoul(id.substr(hash + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed takiff level in '" + id + "'");
    }
    if (m > 16) throw std::invalid_argument("takiff level too large in '" + id + "'");
    return make_takiff_entry(catalog_get(base), m);
  }
  if (id.rfind("abelian_", 0) == 0) {
    std::size_t d = 0;
    try {
      d = std::stoul(id.substr(8));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed abelian dimension in '" + id + "'");
    }
    return make_abelian(d);
  }
  if (id.rfind("sl", 0) == 0 && id.size() == 3 && id[2] >= '2' && id[2] <= '9')
    return make_sl(static_cast<std::size_t>(id[2] - '0'));
  if (id == "g2") return make_g2();
  if (id == "nilpotent_n") return make_nilpotent_n();
  if (id == "solvable_s") return make_solvable_s();
  if (id == "double_sl2") return make_semidirect_double(make_sl(2));
  throw std::invalid_argument("unknown catalog id '" + id + "'");
}

G2Counterexample g2_counterexample_jet() {
  CatalogEntry base = make_takiff_entry(make_g2(), 1);
  const LieAlgebra& alg = *base.algebra;
  RatVec coords(alg.dim(), Rational(0));
  auto put = [&](const std::string& label) {
    auto idx = alg.label_index(label);
    if (!idx) throw std::logic_error("missing g2 label " + label);
    coords[*idx] = 1;
  };
  put("e_beta");
  put("e_beta_3a");
  put("e_m2beta_3a@1");
  Jet jet = make_jet(base.algebra, {std::move(coords)});
  return G2Counterexample{std::move(base), std::move(jet)};
}

}  // namespace takiff
