#include "takiff/reproduce.hpp"

#include <stdexcept>

#include "takiff/catalog.hpp"
#include "takiff/expr.hpp"

namespace takiff {

namespace {

const std::vector<std::pair<std::size_t, std::size_t>> kLevels = {{0, 1}, {0, 2}, {1, 2}, {1, 3}};

void check_modality(std::vector<ReproCheck>& checks, const ModalityQuery& q,
                    std::size_t expected, const std::string& label, const RunOptions& opts) {
  ModalityResult r = modality(q, opts);
  ReproCheck c;
  c.label = label;
  c.expected = std::to_string(expected);
  c.computed = std::to_string(r.value) + " (" + to_string(r.status) + ")";
  c.ok = r.value == expected && r.status != Certification::UpperBoundOnly;
  checks.push_back(std::move(c));
}

std::string level_label(const std::string& head, std::size_t m, std::size_t n,
                        const std::string& tail) {
  return head + ": mod_{" + std::to_string(m) + "," + std::to_string(n) + "}(" + tail + ")";
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> names = {"example-sl2", "example-sl3", "example-s",
                                                 "example-n", "g2-counterexample"};
  return names;
}

std::vector<ReproCheck> reproduce(const std::string& name, const RunOptions& opts) {
  std::vector<ReproCheck> checks;
  if (name == "example-s") {
    CatalogEntry s = catalog_get("solvable_s");
    Jet a1 = parse_jet(s.algebra, "[a1]");
    for (auto [m, n] : kLevels)
      check_modality(checks, {a1, *s.form, m, n, s.known_index}, 2 * (n - m),
                     level_label("s", m, n, "a1"), opts);
    Jet shifted = shift_jet(a1, 1);
    check_modality(checks, {shifted, *s.form, 1, 2, s.known_index}, 2,
                   level_label("s", 1, 2, "0,a1") + " with x0 = 0", opts);
    check_modality(checks, {shifted, *s.form, 1, 3, s.known_index}, 4,
                   level_label("s", 1, 3, "0,a1") + " with x0 = 0", opts);
  } else if (name == "example-n") {
    CatalogEntry nn = catalog_get("nilpotent_n");
    Jet b1 = parse_jet(nn.algebra, "[b1]");
    for (auto [m, n] : kLevels)
      check_modality(checks, {b1, *nn.form, m, n, nn.known_index}, 4 * (n - m),
                     level_label("n", m, n, "b1"), opts);
    Jet a1 = parse_jet(nn.algebra, "[a1]");
    check_modality(checks, {a1, *nn.form, 0, 1, nn.known_index}, 4,
                   level_label("n", 0, 1, "a1"), opts);
  } else if (name == "example-sl2") {
    CatalogEntry sl2 = catalog_get("sl2");
    Jet e = parse_jet(sl2.algebra, "[e]");
    for (auto [m, n] : kLevels)
      check_modality(checks, {e, *sl2.form, m, n, sl2.known_index}, n - m,
                     level_label("sl2", m, n, "e"), opts);
  } else if (name == "example-sl3") {
    CatalogEntry sl3 = catalog_get("sl3");
    Jet reg = parse_jet(sl3.algebra, "[e12 + e23]");
    for (auto [m, n] : kLevels)
      check_modality(checks, {reg, *sl3.form, m, n, sl3.known_index}, 2 * (n - m),
                     level_label("sl3", m, n, "e12+e23"), opts);
    Jet shifted = shift_jet(reg, 1);
    check_modality(checks, {shifted, *sl3.form, 1, 2, sl3.known_index}, 2,
                   level_label("sl3", 1, 2, "0,e12+e23") + " with x0 = 0", opts);
  } else if (name == "g2-counterexample") {
    G2Counterexample ce = g2_counterexample_jet();
    Element x = make_element(ce.base.algebra, ce.jet.coeff(0));
    Subalgebra cent = centralizer(x);
    checks.push_back({"g2#1: dim centralizer of x", "6", std::to_string(cent.dim()),
                      cent.dim() == 6});
    const bool ab = is_abelian(cent);
    checks.push_back({"g2#1: centralizer abelian", "true", ab ? "true" : "false", ab});
    IndexResult chi = index(*ce.base.algebra, opts.rank_options(9));
    checks.push_back({"g2#1: chi", "4", std::to_string(chi.value), chi.value == 4});
    ModalityQuery q{ce.jet, *ce.base.form, 0, 1, ce.base.known_index};
    ModalityResult r = modality(q, opts);
    checks.push_back({"g2#1: mod_{0,1}(x)", "6 > 4",
                      std::to_string(r.value) + " > " + std::to_string(r.lower_bound) + " (" +
                          to_string(r.status) + ")",
                      r.value == 6 && r.lower_bound == 4 &&
                          r.status != Certification::UpperBoundOnly});
  } else {
    throw std::invalid_argument("unknown reproduction target '" + name + "'");
  }
  return checks;
}

}  // namespace takiff
