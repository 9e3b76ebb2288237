// Command-line front end: exact computations in generalized Takiff algebras,
// verification of the centralizer identities, and scripted reproduction of
// the worked examples. Exit codes: 0 ok, 1 verification mismatch, 2 input
// error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "takiff/catalog.hpp"
#include "takiff/expr.hpp"
#include "takiff/invariants.hpp"
#include "takiff/json_io.hpp"
#include "takiff/jordan.hpp"
#include "takiff/reproduce.hpp"

using namespace takiff;

namespace {

struct GlobalConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 8;
  long height = 10;
  std::size_t symbolic_cap = 1024;
  std::size_t symbolic_vars_cap = 12;
  std::string format = "table";

  RunOptions run() const {
    RunOptions o;
    o.seed = seed;
    o.samples = samples;
    o.height = height;
    o.symbolic_cells_cap = symbolic_cap;
    o.symbolic_vars_cap = symbolic_vars_cap;
    return o;
  }
  bool json() const { return format == "json"; }
};

CatalogEntry resolve_algebra(const std::string& ref) {
  if (ref.find('/') != std::string::npos || ref.ends_with(".json") ||
      std::filesystem::exists(ref)) {
    std::ifstream in(ref);
    if (!in) throw std::invalid_argument("cannot open algebra file '" + ref + "'");
    Json j = Json::parse(in);
    LoadedAlgebra loaded = algebra_from_json(j);
    CatalogEntry e;
    e.id = ref;
    e.algebra = loaded.algebra;
    e.form = loaded.form;
    return e;
  }
  return catalog_get(ref);
}

Jet resolve_jet(const CatalogEntry& entry, const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw std::invalid_argument("cannot open jet file '" + text.substr(1) + "'");
    Json j = Json::parse(in);
    if (auto ref = jet_algebra_ref(j); ref && *ref != entry.id)
      throw std::invalid_argument("jet file is for algebra '" + *ref + "', not '" + entry.id +
                                  "'");
    return make_jet(entry.algebra, jet_coeffs_from_json(j, entry.algebra->dim()));
  }
  return parse_jet(entry.algebra, text);
}

std::string element_string(const LieAlgebra& alg, const RatVec& coords) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (is_zero(coords[i])) continue;
    Rational c = coords[i];
    if (first) {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << rat_to_string(c) << " ";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      Rational a = abs(c);
      if (a != 1) os << rat_to_string(a) << " ";
    }
    os << alg.labels()[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

QuadraticForm require_form(const CatalogEntry& e) {
  if (!e.form)
    throw std::invalid_argument("algebra '" + e.id + "' carries no quadratic form");
  return *e.form;
}

void emit(const GlobalConfig& cfg, const Json& payload, const std::string& table_text) {
  if (cfg.json()) {
    Json j;
    j["schema"] = 1;
    for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
    j["seed"] = cfg.seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << table_text;
    std::cout << "seed: " << cfg.seed << "\n";
  }
}

int emit_report(const GlobalConfig& cfg, const Report& rep) {
  Json j;
  j["command"] = "verify";
  j["target"] = rep.name;
  j["pass"] = rep.pass;
  j["lines"] = rep.lines;
  std::ostringstream os;
  os << "verify " << rep.name << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
  for (const auto& line : rep.lines) os << "  " << line << "\n";
  emit(cfg, j, os.str());
  return rep.pass ? 0 : 1;
}

int cmd_reproduce(const GlobalConfig& cfg, const std::string& name) {
  std::vector<std::string> names;
  if (name == "all")
    names = reproduce_targets();
  else
    names = {name};
  std::vector<ReproCheck> checks;
  for (const auto& n : names) {
    auto part = reproduce(n, cfg.run());
    checks.insert(checks.end(), part.begin(), part.end());
  }

  bool all_ok = true;
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.label.size());
  std::ostringstream os;
  Json rows = Json::array();
  for (const auto& c : checks) {
    all_ok = all_ok && c.ok;
    os << (c.ok ? "  ok   " : "  FAIL ") << c.label << std::string(width - c.label.size(), ' ')
       << "  expected " << c.expected << "  computed " << c.computed << "\n";
    rows.push_back(Json{{"label", c.label},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"ok", c.ok}});
  }
  Json j;
  j["command"] = "reproduce";
  j["target"] = name;
  j["pass"] = all_ok;
  j["checks"] = rows;
  std::ostringstream head;
  head << "reproduce " << name << ": " << (all_ok ? "pass" : "FAIL") << "\n" << os.str();
  emit(cfg, j, head.str());
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in generalized Takiff Lie algebras"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--seed", cfg.seed, "RNG seed (echoed in every output)")
      ->envname("TAKIFF_SEED");
  app.add_option("--samples", cfg.samples, "Monte-Carlo sample count")
      ->envname("TAKIFF_SAMPLES");
  app.add_option("--height", cfg.height, "sampling height H (coordinates in [-H,H])")
      ->envname("TAKIFF_HEIGHT");
  app.add_option("--symbolic-cap", cfg.symbolic_cap,
                 "max rows*cols for symbolic elimination")
      ->envname("TAKIFF_SYMBOLIC_CAP");
  app.add_option("--symbolic-vars-cap", cfg.symbolic_vars_cap,
                 "max variable count for symbolic elimination")
      ->envname("TAKIFF_SYMBOLIC_VARS_CAP");
  app.add_option("--format", cfg.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->envname("TAKIFF_FORMAT");

  std::string algebra_ref, element_expr, jet_expr, target;
  std::size_t m = 0, n = 1, cap = 5, trials = 30, shift_k = 1, n_prime = 2;

  auto* cat = app.add_subcommand("catalog", "list or export built-in algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog ids");
  auto* cat_export = cat->add_subcommand("export", "emit the algebra JSON");
  cat_export->add_option("id", algebra_ref, "catalog id")->required();

  auto* idx = app.add_subcommand("index", "index (minimal coadjoint centralizer dimension)");
  idx->add_option("algebra", algebra_ref, "catalog id or JSON path")->required();

  auto* cent = app.add_subcommand("centralizer", "centralizer of an element");
  cent->add_option("algebra", algebra_ref)->required();
  cent->add_option("--element", element_expr, "basis-label expression")->required();

  auto* tak = app.add_subcommand("takiff", "construct the level-m Takiff algebra");
  tak->add_option("algebra", algebra_ref)->required();
  tak->add_option("-m", m, "level")->required();

  auto* mod = app.add_subcommand("modality", "relative modality of a jet");
  mod->add_option("algebra", algebra_ref)->required();
  mod->add_option("--jet", jet_expr, "jet expression \"[x0; x1; ...]\" or @file.json")
      ->required();
  mod->add_option("-m", m, "fixed level")->required();
  mod->add_option("-n", n, "target level")->required();

  auto* cls = app.add_subcommand("classify", "regular / subregular / other");
  cls->add_option("algebra", algebra_ref)->required();
  cls->add_option("--element", element_expr)->required();

  auto* ver = app.add_subcommand("verify", "run one verifier");
  ver->add_option("target", target,
                  "concavity | rais-tauvel | lower-bound | heredity | shift | subregular | "
                  "elashvili | jordan | lemma22 | lemma25 | duality")
      ->required();
  ver->add_option("--algebra", algebra_ref);
  ver->add_option("--element", element_expr);
  ver->add_option("--jet", jet_expr);
  ver->add_option("-m", m);
  ver->add_option("-n", n);
  ver->add_option("-M", cap, "max level for sequences");
  ver->add_option("--trials", trials);
  ver->add_option("-k", shift_k, "shift amount");
  ver->add_option("--nprime", n_prime, "second target level for heredity");

  std::string repro_name;
  auto* rep = app.add_subcommand("reproduce", "re-run the worked examples");
  rep->add_option("name", repro_name,
                  "g2-counterexample | example-s | example-n | example-sl2 | example-sl3 | all")
      ->required();

  // global flags may appear after the subcommand
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const RunOptions run = cfg.run();
    if (cat_list->parsed()) {
      Json j;
      j["command"] = "catalog-list";
      j["ids"] = catalog_ids();
      std::ostringstream os;
      for (const auto& id : catalog_ids()) os << id << "\n";
      emit(cfg, j, os.str());
      return 0;
    }
    if (cat_export->parsed()) {
      CatalogEntry e = resolve_algebra(algebra_ref);
      std::cout << algebra_to_json(e.algebra, e.form).dump(2) << "\n";
      return 0;
    }
    if (idx->parsed()) {
      CatalogEntry e = resolve_algebra(algebra_ref);
      IndexResult r = index(*e.algebra, run.rank_options(0));
      Json j;
      j["command"] = "index";
      j["algebra"] = e.id;
      j["value"] = r.value;
      j["certified"] = r.method == RankMethod::Symbolic;
      std::ostringstream os;
      os << "index(" << e.id << ") = " << r.value
         << (r.method == RankMethod::Symbolic ? " (symbolic)" : " (sampled)") << "\n";
      emit(cfg, j, os.str());
      return 0;
    }
    if (cent->parsed()) {
      CatalogEntry e = resolve_algebra(algebra_ref);
      Element x = make_element(e.algebra, parse_element(*e.algebra, element_expr));
      Subalgebra c = centralizer(x);
      Json basis = Json::array();
      std::ostringstream os;
      os << "dim centralizer = " << c.dim() << (is_abelian(c) ? " (abelian)" : "") << "\n";
      for (std::size_t i = 0; i < c.dim(); ++i) {
        basis.push_back(element_string(*e.algebra, c.basis_vector(i)));
        os << "  " << element_string(*e.algebra, c.basis_vector(i)) << "\n";
      }
      Json j;
      j["command"] = "centralizer";
      j["algebra"] = e.id;
      j["dim"] = c.dim();
      j["abelian"] = is_abelian(c);
      j["basis"] = basis;
      emit(cfg, j, os.str());
      return 0;
    }
    if (tak->parsed()) {
      CatalogEntry e = resolve_algebra(algebra_ref);
      CatalogEntry t = make_takiff_entry(e, m);
      Json j;
      j["command"] = "takiff";
      j["algebra"] = t.id;
      j["dim"] = t.algebra->dim();
      j["has_form"] = t.form.has_value();
      std::ostringstream os;
      os << t.id << ": dim " << t.algebra->dim() << ", basis " << t.algebra->labels().front()
         << " .. " << t.algebra->labels().back()
         << (t.form ? ", extended invariant form attached" : "") << "\n";
      emit(cfg, j, os.str());
      return 0;
    }
    if (mod->parsed()) {
      CatalogEntry e = resolve_algebra(algebra_ref);
      QuadraticForm form = require_form(e);
      Jet x = resolve_jet(e, jet_expr);
      ModalityQuery q{x, form, m, n, e.known_index};
      ModalityResult r = modality(q, run);
      Json j;
      j["command"] = "modality";
      j["algebra"] = e.id;
      Json payload = modality_result_to_json(r, e.id, m, n);
      for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
      std::ostringstream os;
      os << "mod_{" << m << "," << n << "} = " << r.value << "  [" << to_string(r.status)
         << ", lower bound " << r.lower_bound << ", samples " << r.samples_used << "]\n";
      emit(cfg, j, os.str());
      return 0;
    }
    if (cls->parsed()) {
      CatalogEntry e = resolve_algebra(algebra_ref);
      Element x = make_element(e.algebra, parse_element(*e.algebra, element_expr));
      std::size_t chi =
          e.known_index ? *e.known_index : index(*e.algebra, run.rank_options(0)).value;
      ElementClass c = classify(x, chi);
      Json j;
      j["command"] = "classify";
      j["algebra"] = e.id;
      j["class"] = to_string(c);
      j["centralizer_dim"] = chi + c.excess;
      j["chi"] = chi;
      std::ostringstream os;
      os << to_string(c) << " (dim centralizer " << chi + c.excess << ", chi " << chi << ")\n";
      emit(cfg, j, os.str());
      return 0;
    }
    if (ver->parsed()) {
      CatalogEntry e = resolve_algebra(algebra_ref.empty() ? "sl2" : algebra_ref);
      Report report;
      if (target == "concavity") {
        report = verify_concavity(e.algebra, cap, trials, run.height, run.seed);
      } else if (target == "rais-tauvel") {
        report = verify_rais_tauvel(e.algebra, e.known_index, m, trials, run);
      } else if (target == "lower-bound") {
        ModalityQuery q{resolve_jet(e, jet_expr), require_form(e), m, n, e.known_index};
        report = verify_lower_bound(q, run);
      } else if (target == "heredity") {
        ModalityQuery q{resolve_jet(e, jet_expr), require_form(e), m, n, e.known_index};
        report = verify_heredity(q, n_prime, run);
      } else if (target == "shift") {
        ModalityQuery q{resolve_jet(e, jet_expr), require_form(e), m, n, e.known_index};
        report = verify_shift(q, shift_k, run);
      } else if (target == "subregular") {
        Jet x = jet_expr.empty() ? parse_jet(e.algebra, "[" + element_expr + "]")
                                 : resolve_jet(e, jet_expr);
        ModalityQuery q{x, require_form(e), m, n, e.known_index};
        report = verify_subregular(q, {{m, n}}, run);
      } else if (target == "elashvili") {
        Element x0 = make_element(e.algebra, parse_element(*e.algebra, element_expr));
        report = verify_elashvili(require_form(e), e.known_index, x0, run);
      } else if (target == "jordan") {
        ModalityQuery q{resolve_jet(e, jet_expr), require_form(e), m, n, e.known_index};
        report = verify_jordan_reduction(q, run);
      } else if (target == "lemma22") {
        report = verify_recursion(require_form(e), m < 2 ? 2 : m, trials, run.height, run.seed);
      } else if (target == "lemma25") {
        report = verify_m1(require_form(e), trials, run.height, run.seed);
      } else if (target == "duality") {
        report = verify_duality(require_form(e), m, trials, run.height, run.seed);
      } else {
        throw std::invalid_argument("unknown verify target '" + target + "'");
      }
      return emit_report(cfg, report);
    }
    if (rep->parsed()) return cmd_reproduce(cfg, repro_name);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
