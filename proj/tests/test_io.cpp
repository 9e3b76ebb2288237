#include <doctest.h>

#include "takiff/catalog.hpp"
#include "takiff/expr.hpp"
#include "takiff/json_io.hpp"

using namespace takiff;

TEST_CASE("algebra JSON round trip") {
  for (const auto& id : {"sl2", "nilpotent_n", "solvable_s", "g2"}) {
    CatalogEntry e = catalog_get(id);
    Json j = algebra_to_json(e.algebra, e.form);
    LoadedAlgebra back = algebra_from_json(j);
    INFO(id);
    CHECK(back.algebra->dim() == e.algebra->dim());
    CHECK(back.algebra->labels() == e.algebra->labels());
    REQUIRE(back.form.has_value());
    CHECK(back.form->matrix == e.form->matrix);
    for (std::size_t i = 0; i < e.algebra->dim(); ++i)
      for (std::size_t k = i + 1; k < e.algebra->dim(); ++k)
        CHECK(back.algebra->product(i, k).to_dense(e.algebra->dim()) ==
              e.algebra->product(i, k).to_dense(e.algebra->dim()));
  }
}

TEST_CASE("the loader rejects broken tables with the offending datum") {
  Json j;
  j["dim"] = 3;
  j["labels"] = {"e", "h", "f"};
  j["brackets"] = Json::array({
      Json::array({0, 1, Json::array({Json::array({0, "-1"})})}),  // [e,h] = -e: breaks Jacobi
      Json::array({0, 2, Json::array({Json::array({1, "1"})})}),
      Json::array({1, 2, Json::array({Json::array({2, "-2"})})}),
  });
  CHECK_THROWS_WITH_AS(algebra_from_json(j), doctest::Contains("Jacobi"),
                       std::invalid_argument);

  Json layout = j;
  layout["brackets"] = Json::array({Json::array({2, 1, Json::array()})});
  CHECK_THROWS_WITH_AS(algebra_from_json(layout), doctest::Contains("i < j"),
                       std::invalid_argument);

  Json badform;
  badform["dim"] = 2;
  badform["labels"] = {"x", "y"};
  badform["form"] = Json::array({Json::array({"1", "0"}), Json::array({"0", "0"})});  // degenerate
  CHECK_THROWS_WITH_AS(algebra_from_json(badform), doctest::Contains("degenerate"),
                       std::invalid_argument);
}

TEST_CASE("jet JSON round trip") {
  auto sl2 = make_sl(2);
  Jet x = parse_jet(sl2.algebra, "[e + 2/3 h; f]");
  Json j = jet_to_json(x, "sl2");
  CHECK(*jet_algebra_ref(j) == "sl2");
  auto coeffs = jet_coeffs_from_json(j, 3);
  CHECK(make_jet(sl2.algebra, coeffs).coeffs == x.coeffs);
  CHECK_THROWS_AS(jet_coeffs_from_json(j, 4), std::invalid_argument);
}

TEST_CASE("element expressions") {
  auto sl2 = make_sl(2);
  const LieAlgebra& a = *sl2.algebra;
  CHECK(parse_element(a, "e") == RatVec{Rational(1), Rational(0), Rational(0)});
  CHECK(parse_element(a, "e - f") == RatVec{Rational(1), Rational(0), Rational(-1)});
  CHECK(parse_element(a, "2/3 h") == RatVec{Rational(0), Rational(2, 3), Rational(0)});
  CHECK(parse_element(a, "2*e + 1/2*f") == RatVec{Rational(2), Rational(0), Rational(1, 2)});
  CHECK(parse_element(a, "-e + e") == RatVec{Rational(0), Rational(0), Rational(0)});
  CHECK(parse_element(a, "0") == RatVec{Rational(0), Rational(0), Rational(0)});
  CHECK_THROWS_WITH_AS(parse_element(a, "q17"), doctest::Contains("unknown basis label"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_element(a, "3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(a, "e +"), std::invalid_argument);

  // dual labels of the double keep their trailing star
  auto dbl = catalog_get("double_sl2");
  RatVec v = parse_element(*dbl.algebra, "e* - 2 h*");
  CHECK(v[*dbl.algebra->label_index("e*")] == 1);
  CHECK(v[*dbl.algebra->label_index("h*")] == -2);
}

TEST_CASE("jet expressions") {
  auto s = make_solvable_s();
  Jet one = parse_jet(s.algebra, "a1 + b");
  CHECK(one.coeffs.size() == 1);
  Jet two = parse_jet(s.algebra, "[a1; 0; a2 - a3]");
  CHECK(two.coeffs.size() == 3);
  CHECK(vec_is_zero(two.coeff(1)));
  Jet trail = parse_jet(s.algebra, "[a1; 0]");
  CHECK(trail.coeffs.size() == 1);  // trailing zeros normalized away

  // takiff labels address higher degrees, bare labels degree zero
  auto tk = catalog_get("sl2#1");
  RatVec w = parse_element(*tk.algebra, "e + f@1");
  CHECK(w[*tk.algebra->label_index("e")] == 1);
  CHECK(w[*tk.algebra->label_index("f@1")] == 1);
}

TEST_CASE("modality result JSON carries the full record") {
  auto sl2 = make_sl(2);
  ModalityQuery q{parse_jet(sl2.algebra, "[e]"), *sl2.form, 0, 1, sl2.known_index};
  RunOptions opts;
  opts.seed = 77;
  ModalityResult r = modality(q, opts);
  Json j = modality_result_to_json(r, "sl2", 0, 1);
  CHECK(j.at("value") == 1);
  CHECK(j.at("status") == "certified-symbolic");
  CHECK(j.at("lower_bound") == 1);
  CHECK(j.at("seed") == 77);
  CHECK(j.contains("witness"));
}
