#pragma once

#include <string>
#include <vector>

#include "takiff/invariants.hpp"

namespace takiff {

struct ReproCheck {
  std::string label;
  std::string expected;
  std::string computed;
  bool ok = false;
};

/// Names accepted by reproduce(): g2-counterexample, example-s, example-n,
/// example-sl2, example-sl3.
const std::vector<std::string>& reproduce_targets();

/// Scripted checks comparing the published value of each worked example with
/// the engine's output. Throws std::invalid_argument on unknown names.
std::vector<ReproCheck> reproduce(const std::string& name, const RunOptions& opts);

}  // namespace takiff
