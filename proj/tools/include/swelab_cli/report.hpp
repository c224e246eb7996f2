#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "swelab_cli/presets.hpp"
#include <json.hpp>

namespace swelab::cli {

/// Shortest text that round-trips a double ("%.17g").
std::string fmt(double v);
std::string fmt(const std::optional<double>& v);

/// Columns x, H, h, q, eta, u, fr2 with a header line.
void write_snapshot_csv(std::ostream& os, const SimState& state, const Grid& grid,
                        const PhysConstants& c);

nlohmann::ordered_json summary_json(const Preset& preset, const RunReport& rep,
                                    const PhysConstants& c);

struct SweepRow {
  std::string param;
  double value = 0.0;
  std::string scheme;
  std::optional<double> h_l;
  std::optional<double> h_r;
  std::optional<double> exact_h_r;
  double steady_residual = 0.0;
  bool met_steady = false;
  std::string error;
};

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

struct ConvergenceRecord {
  std::string scheme;
  ParamMap params;
  ConvergenceResult result;
};

/// One line per (scheme, parameters, mesh).
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records);
/// One line per (scheme, parameters); "not reached" when no mesh met the bound.
void write_cells_needed_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records);

}  // namespace swelab::cli
