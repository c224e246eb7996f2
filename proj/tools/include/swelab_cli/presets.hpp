#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swelab/diagnostics.hpp"
#include "swelab/solver.hpp"

namespace swelab::cli {

using ParamMap = std::map<std::string, double>;

/// A free parameter of a test preset with its admissible interval.
struct ParamInfo {
  std::string name;
  double default_value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool lo_inclusive = true;
  bool hi_inclusive = true;
  std::string help;
};

/// Resolved preset: the simulation plus whatever exact reference it has.
struct Preset {
  int id = 0;
  ParamMap params;  // every parameter of the test, defaults filled in
  SimSpec spec;
  /// Exact steady profile on a grid, when one exists for this test.
  std::optional<ExactOracle> exact;
  /// Exact right-of-step depth (step tests only).
  std::optional<double> exact_h_r;
  std::string exact_error;  // why exact_h_r is missing, if it is
};

/// Parameters accepted by test `id` (1..6). Throws InvalidArgument.
const std::vector<ParamInfo>& preset_params(int id);

int default_cells(int id);

/// Builds the SimSpec of test `id` with parameter overrides, an optional
/// mesh override and an optional stop-rule override. Unknown names and
/// out-of-range values throw InvalidArgument.
Preset build_preset(int id, const ParamMap& overrides = {}, std::optional<int> n_cells = {},
                    std::optional<StopRule> stop = {}, const PhysConstants& c = {});

}  // namespace swelab::cli
