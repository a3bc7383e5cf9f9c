#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "multindex/poly.hpp"

namespace multindex {

/// Knobs for the property suites. `summation` is swappable so a harness can
/// check that a broken operator is caught.
struct LawOptions {
  std::uint64_t seed = 0;
  /// Bound on lengths, letters and indices; tree suites use size + 1 vertices.
  std::size_t size = 3;
  std::function<Poly(const Poly&)> summation = multindex::summation;
};

struct LawResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First failing case, empty when passed.
  std::string failure;
};

/// Names of all laws, grouped by prefix ("operad.", "ck.", ...).
std::vector<std::string> law_names();

LawResult run_law(const std::string& name, const LawOptions& options);

/// Runs every law whose name starts with `prefix` (all when empty).
std::vector<LawResult> run_laws(const LawOptions& options, const std::string& prefix = "");

}  // namespace multindex
