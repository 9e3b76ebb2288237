#include <doctest.h>

#include "oracles.hpp"
#include "takiff/catalog.hpp"
#include "takiff/expr.hpp"
#include "takiff/invariants.hpp"
#include "takiff/rng.hpp"

using namespace takiff;

namespace {

RunOptions seeded(std::uint64_t seed) {
  RunOptions o;
  o.seed = seed;
  return o;
}

Jet jet_of(const CatalogEntry& e, const std::string& expr) {
  return parse_jet(e.algebra, expr);
}

}  // namespace

TEST_CASE("centralizer dimension sequences") {
  auto ab = make_abelian(4);
  CHECK(centralizer_dim_sequence(make_jet(ab.algebra, {}), 3) ==
        std::vector<std::size_t>{4, 8, 12, 16});

  auto sl2 = make_sl(2);
  CHECK(centralizer_dim_sequence(jet_of(sl2, "[e]"), 4) ==
        std::vector<std::size_t>{1, 2, 3, 4, 5});

  auto n = make_nilpotent_n();
  CHECK(centralizer_dim_sequence(jet_of(n, "[b1]"), 0)[0] == 6);
}

TEST_CASE("concavity checks") {
  CHECK(check_sequence_concavity({4, 8, 12, 16}).pass);  // affine
  auto bad = check_sequence_concavity({2, 5, 9});
  CHECK_FALSE(bad.pass);
  CHECK(*bad.first_violation == 0);

  for (const auto& id : {"sl2", "nilpotent_n", "solvable_s", "double_sl2"}) {
    auto entry = catalog_get(id);
    Report rep = verify_concavity(entry.algebra, 5, 10, 6, 2025);
    INFO(id);
    CHECK(rep.pass);
  }
}

TEST_CASE("classification") {
  auto sl2 = make_sl(2);
  CHECK(classify(make_element(sl2.algebra, parse_element(*sl2.algebra, "e")), 1).kind ==
        ElementClass::Regular);
  auto sl3 = make_sl(3);
  auto cls0 = classify(zero_element(sl3.algebra), 2);
  CHECK(cls0.kind == ElementClass::Other);
  CHECK(cls0.excess == 6);
  auto n = make_nilpotent_n();
  CHECK(classify(make_element(n.algebra, parse_element(*n.algebra, "b1")), 4).kind ==
        ElementClass::Subregular);
}

TEST_CASE("modality basics") {
  auto sl2 = make_sl(2);
  Jet e = jet_of(sl2, "[e]");
  ModalityQuery qe{e, *sl2.form, 1, 1, sl2.known_index};
  auto r = modality(qe, seeded(1));
  CHECK(r.value == 0);

  auto ab = make_abelian(3);
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 3}}) {
    ModalityQuery q{make_jet(ab.algebra, {}), *ab.form, m, n, ab.known_index};
    auto ra = modality(q, seeded(2));
    CHECK(ra.value == (n - m) * 3);
    CHECK(ra.status != Certification::UpperBoundOnly);
  }

  ModalityQuery q01{e, *sl2.form, 0, 1, sl2.known_index};
  auto r01 = modality(q01, seeded(3));
  CHECK(r01.value == 1);
  CHECK(r01.status == Certification::CertifiedSymbolic);
  CHECK(r01.lower_bound == 1);

  CHECK_THROWS_AS(modality(ModalityQuery{e, *sl2.form, 2, 1, {}}, seeded(4)),
                  std::invalid_argument);
}

TEST_CASE("modality witnesses re-evaluate exactly") {
  auto s = make_solvable_s();
  Jet x = jet_of(s, "[a1]");
  ModalityQuery q{x, *s.form, 0, 2, s.known_index};
  auto r = modality(q, seeded(5));
  CHECK(r.value == 4);  // 2 (n-m) with chi = 2
  REQUIRE(r.witness.has_value());
  CHECK(takiff_centralizer_dim(*r.witness, 2) == r.value + r.fixed_centralizer_dim);
  // the witness agrees with x through degree m
  CHECK(r.witness->coeff(0) == x.coeff(0));
}

TEST_CASE("modality against the exhaustive grid oracle") {
  // dim <= 4 algebras at (m,n) = (0,1): the grid over {-2..2}^d upper-bounds
  // the modality and attains it generically
  SplitMix64 rng(71);
  std::size_t attained = 0, cases = 0;
  for (const auto& id : {"abelian_2", "sl2", "solvable_s"}) {
    auto entry = catalog_get(id);
    const std::size_t d = entry.algebra->dim();
    for (int t = 0; t < 3; ++t) {
      Jet x = make_jet(entry.algebra, {random_int_vector(d, 2, rng.next())});
      ModalityQuery q{x, *entry.form, 0, 1, entry.known_index};
      auto r = modality(q, seeded(700 + t));
      const std::size_t u0 = takiff_centralizer_dim(x, 0);
      std::size_t grid_min = SIZE_MAX;
      oracle::for_each_grid_point(d, 2, [&](const RatVec& y1) {
        Jet ext = make_jet(entry.algebra, {x.coeff(0), y1});
        grid_min = std::min(grid_min, takiff_centralizer_dim(ext, 1) - u0);
      });
      ++cases;
      CHECK(grid_min >= r.value);
      if (grid_min == r.value) ++attained;
    }
  }
  CHECK(attained * 10 >= cases * 9);  // >= 90%
}

TEST_CASE("rais-tauvel verifier") {
  auto sl2 = make_sl(2);
  for (std::size_t m = 1; m <= 2; ++m) {
    Report rep = verify_rais_tauvel(sl2.algebra, sl2.known_index, m, 9, seeded(6));
    INFO("sl2 m=", m);
    CHECK(rep.pass);
  }
  auto n = make_nilpotent_n();
  Report repn = verify_rais_tauvel(n.algebra, n.known_index, 1, 9, seeded(7));
  CHECK(repn.pass);
}

TEST_CASE("lower bound verifier over random jets") {
  SplitMix64 rng(81);
  for (const auto& id : {"sl2", "nilpotent_n", "solvable_s"}) {
    auto entry = catalog_get(id);
    for (auto [m, n] :
         std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}}) {
      Jet x = random_jet(entry.algebra, m + 1, 5, rng.next());
      ModalityQuery q{x, *entry.form, m, n, entry.known_index};
      Report rep = verify_lower_bound(q, seeded(rng.next()));
      INFO(id, " (", m, ",", n, ")");
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("heredity verifier") {
  auto sl2 = make_sl(2);
  ModalityQuery q{jet_of(sl2, "[e]"), *sl2.form, 0, 1, sl2.known_index};
  Report rep = verify_heredity(q, 3, seeded(8));
  CHECK(rep.pass);

  auto ab = make_abelian(2);
  ModalityQuery qa{make_jet(ab.algebra, {}), *ab.form, 0, 1, ab.known_index};
  CHECK(verify_heredity(qa, 2, seeded(9)).pass);

  auto n = make_nilpotent_n();
  ModalityQuery qn{jet_of(n, "[b1]"), *n.form, 0, 1, n.known_index};
  CHECK(verify_heredity(qn, 2, seeded(10)).pass);
}

TEST_CASE("subregular trichotomy verifier") {
  auto n = make_nilpotent_n();
  ModalityQuery qn{jet_of(n, "[b1]"), *n.form, 0, 1, n.known_index};
  Report rep = verify_subregular(qn, {{0, 1}, {0, 2}, {1, 2}}, seeded(11));
  CHECK(rep.pass);  // non-abelian centralizer: 4 (n-m)

  auto s = make_solvable_s();
  ModalityQuery qs{make_jet(s.algebra, {}), *s.form, 0, 1, s.known_index};
  Report reps = verify_subregular(qs, {{0, 1}, {1, 2}}, seeded(12));
  CHECK(reps.pass);  // 0 is subregular in s, centralizer s itself is not abelian

  // regular element rejected by the precondition
  auto sl2 = make_sl(2);
  ModalityQuery qreg{jet_of(sl2, "[e]"), *sl2.form, 0, 1, sl2.known_index};
  CHECK_FALSE(verify_subregular(qreg, {{0, 1}}, seeded(13)).pass);
}

TEST_CASE("the g2 counterexample end to end") {
  G2Counterexample ce = g2_counterexample_jet();
  ModalityQuery q{ce.jet, *ce.base.form, 0, 1, ce.base.known_index};
  auto r = modality(q, seeded(14));
  CHECK(r.value == 6);
  CHECK(r.lower_bound == 4);  // strictly exceeded
  CHECK(r.status == Certification::CertifiedByBound);

  Report rep = verify_subregular(q, {{0, 1}}, seeded(15));
  CHECK(rep.pass);
}

TEST_CASE("elashvili verifier on sl2 and sl3 orbit representatives") {
  auto sl2 = make_sl(2);
  for (const char* expr : {"0", "e", "h", "h + e"}) {
    Element x0 = make_element(sl2.algebra, parse_element(*sl2.algebra, expr));
    Report rep = verify_elashvili(*sl2.form, sl2.known_index, x0, seeded(16));
    INFO("sl2 x0 = ", expr);
    CHECK(rep.pass);
  }
  auto sl3 = make_sl(3);
  for (const char* expr : {"0", "e12", "e12 + e23", "h1 + 2 h2", "h1 + 2 h2 + e12"}) {
    Element x0 = make_element(sl3.algebra, parse_element(*sl3.algebra, expr));
    Report rep = verify_elashvili(*sl3.form, sl3.known_index, x0, seeded(17));
    INFO("sl3 x0 = ", expr);
    CHECK(rep.pass);
  }
}

TEST_CASE("shift verifier") {
  auto s = make_solvable_s();
  ModalityQuery qs{jet_of(s, "[a1]"), *s.form, 0, 1, s.known_index};
  Report rep = verify_shift(qs, 1, seeded(18));
  CHECK(rep.pass);

  auto ab = make_abelian(3);
  ModalityQuery qa{make_jet(ab.algebra, {}), *ab.form, 0, 2, ab.known_index};
  CHECK(verify_shift(qa, 2, seeded(19)).pass);

  auto sl3 = make_sl(3);
  ModalityQuery q3{jet_of(sl3, "[e12 + e23]"), *sl3.form, 0, 1, sl3.known_index};
  CHECK(verify_shift(q3, 2, seeded(20)).pass);
}

TEST_CASE("jordan reduction verifier") {
  auto sl3 = make_sl(3);
  // nilpotent degree-0 part: the reduction is the identity
  ModalityQuery qnil{jet_of(sl3, "[e12 + e23; e13]"), *sl3.form, 0, 1, sl3.known_index};
  CHECK(verify_jordan_reduction(qnil, seeded(21)).pass);

  // semisimple degree-0 part
  ModalityQuery qss{jet_of(sl3, "[h1 + 2 h2; e13]"), *sl3.form, 1, 2, sl3.known_index};
  CHECK(verify_jordan_reduction(qss, seeded(22)).pass);

  // mixed, with a degree-1 part split between g^{x_ss} and [g, x_ss]
  ModalityQuery qmix{jet_of(sl3, "[h1 + 2 h2 + e12; e13 + e21]"), *sl3.form, 0, 1,
                     sl3.known_index};
  CHECK(verify_jordan_reduction(qmix, seeded(23)).pass);
}

TEST_CASE("recursion, level-1 and duality verifiers") {
  for (const auto& id : {"sl2", "nilpotent_n", "solvable_s"}) {
    auto entry = catalog_get(id);
    INFO(id);
    CHECK(verify_recursion(*entry.form, 2, 8, 5, 31).pass);
    CHECK(verify_recursion(*entry.form, 3, 5, 5, 32).pass);
    CHECK(verify_m1(*entry.form, 10, 5, 33).pass);
    CHECK(verify_duality(*entry.form, 2, 8, 5, 34).pass);
  }
}

TEST_CASE("successive centralizer dimensions step with the parity of dim g") {
  SplitMix64 rng(91);
  for (const auto& id : {"sl2", "sl3", "nilpotent_n", "solvable_s", "double_sl2"}) {
    auto entry = catalog_get(id);
    const std::size_t d = entry.algebra->dim();
    for (int t = 0; t < 5; ++t) {
      Jet x = random_jet(entry.algebra, 3, 6, rng.next());
      auto u = centralizer_dim_sequence(x, 4);
      for (std::size_t k = 0; k + 1 < u.size(); ++k)
        CHECK(((u[k + 1] - u[k]) % 2) == (d % 2));
    }
  }
}

TEST_CASE("classification is invariant under elementary automorphisms") {
  // elements of g_1 of sl2, moved by exp(ad(y (x) T)) acting on g_1
  auto sl2 = make_sl(2);
  TakiffAlgebra g1(sl2.algebra, 1);
  CatalogEntry base = make_takiff_entry(catalog_get("sl2"), 1);
  SplitMix64 rng(92);
  for (int t = 0; t < 6; ++t) {
    Element v = make_element(g1.algebra(), random_int_vector(6, 5, rng.next()));
    Element y = make_element(sl2.algebra, random_int_vector(3, 5, rng.next()));
    RatMatrix aut = elementary_automorphism(y, 1, g1);
    Element moved = make_element(g1.algebra(), aut.apply(v.coords));
    CHECK(centralizer_dim(v) == centralizer_dim(moved));
    ElementClass before = classify(v, *base.known_index);
    ElementClass after = classify(moved, *base.known_index);
    CHECK(before.kind == after.kind);
    CHECK(before.excess == after.excess);
  }
}

TEST_CASE("more samples never increase the sampled modality") {
  G2Counterexample ce = g2_counterexample_jet();
  // drop the known index so no early certification stop happens
  ModalityQuery q{ce.jet, *ce.base.form, 0, 1, std::nullopt};
  RunOptions few = seeded(35);
  few.samples = 2;
  RunOptions many = seeded(35);
  many.samples = 6;
  auto rf = modality(q, few);
  auto rm = modality(q, many);
  CHECK(rm.value <= rf.value);
  CHECK(rf.status == Certification::UpperBoundOnly);
}
