#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swelab/hydrostatic.hpp"
#include "swelab/solver.hpp"

namespace swelab {

/// dx * sum |h_num - h_exact|. Throws LengthMismatch.
double l1_error(std::span<const PhysState> numeric, std::span<const PhysState> exact, double dx);
/// Same metric on the discharge.
double l1_error_q(std::span<const PhysState> numeric, std::span<const PhysState> exact, double dx);

/// Largest |dh| + |dq| over cells after one update at the CFL time step.
double well_balance_residual(const SimState& state, const SchemeConfig& cfg, const Grid& grid,
                             const BoundaryConditions& bc, const PhysConstants& c);

/// Sufficient interface condition for a semi-discrete entropy inequality of
/// a reconstruction scheme: E_l >= 0 and E_r <= 0.
struct EntropyCheck {
  double E_l = 0.0;
  double E_r = 0.0;
  double H_star_used = 0.0;
  bool satisfied = false;
};

/// Evaluates E_l, E_r for a reconstructed interface. `flux` is the
/// homogeneous flux at (w-, w+); T_minus / T_plus are the flux-form large
/// step corrections (zero for the original reconstruction). H* defaults to
/// the reconstruction level min(H_l, H_r).
EntropyCheck entropy_interface_check(const ExtState& W_l, const ExtState& W_r,
                                     const HRInterface& iface, Vec2 flux, double T_minus,
                                     double T_plus, const PhysConstants& c,
                                     std::optional<double> H_star = std::nullopt,
                                     double tol = 1e-12);

/// Discrete entropy production of one step:
///   sum_i (eta(after_i) - eta(before_i)) dx/dt + G_right - G_left,
/// with boundary entropy fluxes G = 1/2 (G_a + G_b) - dx/(2 dt) (eta_b - eta_a)
/// taken between each ghost and its neighbour at time n (the entropy flux
/// that matches the Lax-Friedrichs flux). Negative means dissipation.
double entropy_production_total(const SimState& before, const SimState& after,
                                const GhostCells& ghosts, double dt, double dx,
                                const PhysConstants& c);

struct ConvergenceRow {
  int n_cells = 0;
  double l1_error = 0.0;
  bool met_bound = false;
  bool steady_reached = false;
  std::string error;  // non-empty when the run failed
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
  /// Smallest mesh of the ladder meeting the bound; nullopt = not reached.
  std::optional<int> cells_needed;
};

inline constexpr std::array<int, 8> kFullMeshLadder{100, 200, 400, 800, 1600, 3200, 6400, 12800};
inline constexpr std::array<int, 6> kDeskMeshLadder{100, 200, 400, 800, 1600, 3200};

using SpecFamily = std::function<SimSpec(int n_cells)>;
using ExactOracle = std::function<std::vector<PhysState>(const Grid&)>;

/// Runs each mesh of the ladder (concurrently), measures the L1 depth error
/// against the exact oracle on the final state and reports the smallest mesh
/// meeting `bound`. Rows stay in ladder order.
ConvergenceResult convergence_study(const SpecFamily& family, const SchemeConfig& cfg,
                                    const ExactOracle& exact, double bound,
                                    std::span<const int> ladder, const PhysConstants& c);

}  // namespace swelab
