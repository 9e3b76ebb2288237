#include "takiff/json_io.hpp"

#include <stdexcept>

namespace takiff {

Json algebra_to_json(const AlgebraPtr& algebra, const std::optional<QuadraticForm>& form) {
  Json j;
  j["dim"] = algebra->dim();
  j["labels"] = algebra->labels();
  Json brackets = Json::array();
  for (const auto& e : algebra->bracket_list()) {
    Json value = Json::array();
    for (const auto& [k, c] : e.value.entries) value.push_back({k, rat_to_string(c)});
    brackets.push_back({e.i, e.j, value});
  }
  j["brackets"] = std::move(brackets);
  if (form) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < form->matrix.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < form->matrix.cols(); ++c)
        row.push_back(rat_to_string(form->matrix.at(r, c)));
      rows.push_back(std::move(row));
    }
    j["form"] = std::move(rows);
  }
  return j;
}

LoadedAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("labels"))
    throw std::invalid_argument("algebra JSON needs 'dim' and 'labels'");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  if (labels.size() != dim) throw std::invalid_argument("label count does not match dim");

  std::vector<BracketEntry> brackets;
  if (j.contains("brackets")) {
    for (const auto& item : j.at("brackets")) {
      if (!item.is_array() || item.size() != 3)
        throw std::invalid_argument("bracket entry must be [i, j, [[k, coeff], ...]]");
      BracketEntry e;
      e.i = item.at(0).get<std::size_t>();
      e.j = item.at(1).get<std::size_t>();
      if (e.i >= e.j)
        throw std::invalid_argument("bracket entry (" + std::to_string(e.i) + "," +
                                    std::to_string(e.j) + ") violates the i < j layout");
      for (const auto& kv : item.at(2)) {
        if (!kv.is_array() || kv.size() != 2)
          throw std::invalid_argument("bracket coefficient must be [k, \"p/q\"]");
        e.value.entries.emplace_back(kv.at(0).get<std::size_t>(),
                                     rat_from_string(kv.at(1).get<std::string>()));
      }
      brackets.push_back(std::move(e));
    }
  }
  std::string name = j.value("name", std::string("loaded"));
  LoadedAlgebra out;
  out.algebra = LieAlgebra::create(name, std::move(labels), std::move(brackets),
                                   TableCheck::Full);
  if (j.contains("form")) {
    const auto& rows = j.at("form");
    if (rows.size() != dim) throw std::invalid_argument("form row count does not match dim");
    RatMatrix k(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (rows.at(r).size() != dim)
        throw std::invalid_argument("form column count does not match dim");
      for (std::size_t c = 0; c < dim; ++c)
        k.at(r, c) = rat_from_string(rows.at(r).at(c).get<std::string>());
    }
    FormReport rep = form_check(*out.algebra, k);
    if (!rep.ok()) {
      std::string what = "form rejected:";
      if (!rep.symmetric) what += " not symmetric;";
      if (!rep.nondegenerate) what += " degenerate;";
      if (!rep.invariant) {
        what += " not invariant at triple (";
        what += std::to_string((*rep.violating_triple)[0]) + "," +
                std::to_string((*rep.violating_triple)[1]) + "," +
                std::to_string((*rep.violating_triple)[2]) + ");";
      }
      throw std::invalid_argument(what);
    }
    out.form = QuadraticForm{out.algebra, std::move(k)};
  }
  return out;
}

Json jet_to_json(const Jet& jet, const std::string& algebra_ref) {
  Json j;
  j["algebra"] = algebra_ref;
  Json coeffs = Json::array();
  for (const auto& c : jet.coeffs) {
    Json row = Json::array();
    for (const auto& x : c) row.push_back(rat_to_string(x));
    coeffs.push_back(std::move(row));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

std::vector<RatVec> jet_coeffs_from_json(const Json& j, std::size_t dim) {
  if (!j.contains("coeffs")) throw std::invalid_argument("jet JSON needs 'coeffs'");
  std::vector<RatVec> coeffs;
  for (const auto& row : j.at("coeffs")) {
    if (row.size() != dim)
      throw std::invalid_argument("jet coefficient length does not match the algebra");
    RatVec v(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) v[i] = rat_from_string(row.at(i).get<std::string>());
    coeffs.push_back(std::move(v));
  }
  return coeffs;
}

std::optional<std::string> jet_algebra_ref(const Json& j) {
  if (j.contains("algebra") && j.at("algebra").is_string())
    return j.at("algebra").get<std::string>();
  return std::nullopt;
}

Json modality_result_to_json(const ModalityResult& r, const std::string& algebra_ref,
                             std::size_t m, std::size_t n) {
  Json j;
  j["value"] = r.value;
  j["status"] = to_string(r.status);
  j["lower_bound"] = r.lower_bound;
  j["base_index"] = r.base_index;
  j["index_exact"] = r.index_exact;
  j["fixed_centralizer_dim"] = r.fixed_centralizer_dim;
  j["m"] = m;
  j["n"] = n;
  if (r.witness)
    j["witness"] = jet_to_json(*r.witness, algebra_ref);
  else
    j["witness"] = nullptr;
  j["seed"] = r.seed;
  j["samples"] = r.samples_used;
  return j;
}

}  // namespace takiff
