#pragma once

#include <optional>
#include <string>
#include <vector>

#include "takiff/lie_algebra.hpp"
#include "takiff/takiff_algebra.hpp"

namespace takiff {

struct CatalogEntry {
  std::string id;
  AlgebraPtr algebra;
  std::optional<QuadraticForm> form;
  std::optional<std::size_t> known_index;
  std::string note;
};

/// Ids resolvable by catalog_get: abelian_<d>, sl<n>, g2, nilpotent_n,
/// solvable_s, double_sl2. Suffix "#m" wraps an entry in its m-th Takiff
/// algebra (with the extended form, index scaled by m+1).
const std::vector<std::string>& catalog_ids();
CatalogEntry catalog_get(const std::string& id);

CatalogEntry make_abelian(std::size_t d);
CatalogEntry make_sl(std::size_t n);
CatalogEntry make_g2();
CatalogEntry make_nilpotent_n();
CatalogEntry make_solvable_s();
CatalogEntry make_product(const CatalogEntry& a, const CatalogEntry& b);
/// g semidirect g* under the coadjoint action, with K(x+a, y+b) = a(y)+b(x).
CatalogEntry make_semidirect_double(const CatalogEntry& g);
/// Entry for takiff(base, m) carrying the extended form.
CatalogEntry make_takiff_entry(const CatalogEntry& base, std::size_t m);

/// The jet (e_beta + e_beta_3a, e_m2beta_3a) over takiff(g2,1), paired with
/// its base entry.
struct G2Counterexample {
  CatalogEntry base;  // takiff(g2,1) with extended form, index 4
  Jet jet;
};
G2Counterexample g2_counterexample_jet();

}  // namespace takiff
