#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "swelab/scheme.hpp"
#include "swelab/state.hpp"

namespace swelab {

/// Uniform 1D grid; cell i (0-based) is centred at x_left + (i + 1/2) dx.
struct Grid {
  double x_left = 0.0;
  double x_right = 1.0;
  int n_cells = 2;

  double dx() const { return (x_right - x_left) / n_cells; }
  double center(int i) const { return x_left + (i + 0.5) * dx(); }
  /// Index of the cell whose centre is nearest to x, clamped to the grid.
  int nearest_cell(double x) const;
  void validate() const;
};

enum class BoundaryKind { Open, ImposedDischarge, ImposedDepth, ImposedBoth, Periodic };

struct SideCondition {
  BoundaryKind kind = BoundaryKind::Open;
  double h = 0.0;
  double q = 0.0;

  static SideCondition open() { return {}; }
  static SideCondition discharge(double q) { return {BoundaryKind::ImposedDischarge, 0.0, q}; }
  static SideCondition depth(double h) { return {BoundaryKind::ImposedDepth, h, 0.0}; }
  static SideCondition both(double h, double q) { return {BoundaryKind::ImposedBoth, h, q}; }
  static SideCondition periodic() { return {BoundaryKind::Periodic, 0.0, 0.0}; }
};

struct BoundaryConditions {
  SideCondition left;
  SideCondition right;
};

struct GhostCells {
  ExtState left;
  ExtState right;
};

struct SimState {
  double t = 0.0;
  std::vector<PhysState> w;
  std::vector<double> H;

  int size() const { return static_cast<int>(w.size()); }
  ExtState cell(int i) const { return {w[i], H[i]}; }
};

/// Stop at `final_time`, or earlier once the steady-state residual drops to
/// steady_tol * (initial residual + 1e-30) when `until_steady` is set.
struct StopRule {
  double final_time = 0.0;
  bool until_steady = false;
  double steady_tol = 1e-8;
  long max_steps = 20'000'000;
};

struct Probe {
  std::string name;
  double x = 0.0;
};

/// Everything needed to reproduce one run.
struct SimSpec {
  std::string label;
  Grid grid;
  std::function<double(double)> bathymetry;
  /// Initial state at position x over bottom depth H.
  std::function<PhysState(double x, double H)> initial;
  BoundaryConditions bc;
  StopRule stop;
  std::vector<double> output_times;
  std::vector<Probe> probes;
  /// Record entropy production and interface entropy checks every step.
  bool track_entropy = false;
};

struct StepStats {
  long clip_events = 0;       // h < 0 after the update, clipped to 0
  long deep_clip_events = 0;  // h < -h_dry after the update
  double min_h_before_clip = 0.0;
  long sonic_interfaces = 0;
  long large_step_interfaces = 0;
  long gate_evaluations = 0;
  long gate_passes = 0;

  void merge(const StepStats& s);
};

struct ProbeValue {
  std::string name;
  double x = 0.0;
  int cell = 0;
  double H = 0.0;
  PhysState w;
};

struct RunDiagnostics {
  long steps = 0;
  double final_time = 0.0;
  bool steady_reached = false;
  double initial_residual = 0.0;
  double final_residual = 0.0;
  StepStats totals;
  /// Large-step interfaces in the last update.
  long final_large_steps = 0;
  // Entropy tracking (only when SimSpec::track_entropy).
  bool entropy_tracked = false;
  double max_entropy_production = 0.0;
  long entropy_checks_regular = 0;
  long entropy_violations_regular = 0;
  long entropy_checks_large_step = 0;
  long entropy_violations_large_step = 0;
};

struct RunReport {
  std::string label;
  SchemeConfig cfg;
  Grid grid;
  OmegaSourceForm omega_form = OmegaSourceForm::Halved;
  std::vector<SimState> snapshots;
  std::vector<ProbeValue> probes;
  std::vector<double> residual_history;
  RunDiagnostics diag;
  SimState final_state;
};

/// Samples bathymetry and initial data at cell centres. Dry cells get q = 0.
SimState initial_state(const SimSpec& spec, const PhysConstants& c);

/// CFL dt = cfl dx / max(|u| + sqrt(g h)) over wet cells (and any extra
/// states, e.g. ghosts). Throws AllDry when nothing is wet.
double cfl_dt(const SimState& state, const SchemeConfig& cfg, const Grid& grid,
              const PhysConstants& c, std::span<const ExtState> extra = {});

GhostCells apply_boundaries(const SimState& state, const BoundaryConditions& bc);

/// Terms of the n + 1 interfaces, ghost interfaces included, from time-n data.
std::vector<InterfaceTerms> compute_interface_terms(const SimState& state, const GhostCells& ghosts,
                                                    const SchemeConfig& cfg, double dx, double dt,
                                                    const PhysConstants& c);

/// Applies precomputed interface terms to produce the time-(n+1) state.
SimState assemble_update(const SimState& state, std::span<const InterfaceTerms> terms, double dx,
                         double dt, const PhysConstants& c, StepStats* stats = nullptr);

/// One explicit update. Negative depths are clipped to 0 and counted;
/// depths below h_dry keep h but lose their discharge. Throws NonFinite
/// naming the cell on NaN/Inf.
SimState step(const SimState& state, const SchemeConfig& cfg, const Grid& grid,
              const BoundaryConditions& bc, double dt, const PhysConstants& c,
              StepStats* stats = nullptr);

/// Sum over cells of (|dh| + |dq|) dx / dt.
double update_residual(const SimState& before, const SimState& after, double dx, double dt);

RunReport run(const SimSpec& spec, const SchemeConfig& cfg, const PhysConstants& c);

}  // namespace swelab
