#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "takiff/invariants.hpp"
#include "takiff/lie_algebra.hpp"
#include "takiff/takiff_algebra.hpp"

namespace takiff {

using Json = nlohmann::ordered_json;

/// { "dim": d, "labels": [...], "brackets": [[i, j, [[k, "p/q"], ...]], ...],
///   "form": [["p/q", ...], ...] } — 0-based, only i < j with nonzero value.
Json algebra_to_json(const AlgebraPtr& algebra, const std::optional<QuadraticForm>& form);

struct LoadedAlgebra {
  AlgebraPtr algebra;
  std::optional<QuadraticForm> form;
};

/// Rejects tables violating antisymmetry layout or the Jacobi identity,
/// naming the offending datum in the exception message.
LoadedAlgebra algebra_from_json(const Json& j);

/// { "algebra": <ref>, "coeffs": [["p/q", ...], ...] }
Json jet_to_json(const Jet& jet, const std::string& algebra_ref);
std::vector<RatVec> jet_coeffs_from_json(const Json& j, std::size_t dim);
std::optional<std::string> jet_algebra_ref(const Json& j);

Json modality_result_to_json(const ModalityResult& r, const std::string& algebra_ref,
                             std::size_t m, std::size_t n);

}  // namespace takiff
