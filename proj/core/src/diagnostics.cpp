#include "swelab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "swelab/physics.hpp"

namespace swelab {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::LengthMismatch, "length mismatch: " + std::to_string(a) + " vs " +
                                               std::to_string(b));
  }
}

double numerical_entropy_flux(const ExtState& a, const ExtState& b, double dx, double dt,
                              const PhysConstants& c) {
  const EntropyValues ea = entropy_pair(a, c);
  const EntropyValues eb = entropy_pair(b, c);
  return 0.5 * (ea.G + eb.G) - 0.5 * dx / dt * (eb.eta - ea.eta);
}

}  // namespace

double l1_error(std::span<const PhysState> numeric, std::span<const PhysState> exact, double dx) {
  require_same_length(numeric.size(), exact.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) sum += std::abs(numeric[i].h - exact[i].h);
  return dx * sum;
}

double l1_error_q(std::span<const PhysState> numeric, std::span<const PhysState> exact, double dx) {
  require_same_length(numeric.size(), exact.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) sum += std::abs(numeric[i].q - exact[i].q);
  return dx * sum;
}

double well_balance_residual(const SimState& state, const SchemeConfig& cfg, const Grid& grid,
                             const BoundaryConditions& bc, const PhysConstants& c) {
  const GhostCells ghosts = apply_boundaries(state, bc);
  const std::array<ExtState, 2> edge{ghosts.left, ghosts.right};
  const double dt = cfl_dt(state, cfg, grid, c, edge);
  const SimState next = step(state, cfg, grid, bc, dt, c);
  double worst = 0.0;
  for (int i = 0; i < state.size(); ++i) {
    worst = std::max(worst, std::abs(next.w[i].h - state.w[i].h) + std::abs(next.w[i].q - state.w[i].q));
  }
  return worst;
}

EntropyCheck entropy_interface_check(const ExtState& W_l, const ExtState& W_r,
                                     const HRInterface& iface, Vec2 flux, double T_minus,
                                     double T_plus, const PhysConstants& c,
                                     std::optional<double> H_star, double tol) {
  EntropyCheck out;
  out.H_star_used = H_star ? *H_star : iface.H_star;
  const double Hs = out.H_star_used;
  const double Fh = flux.x0;
  const double Fq = flux.x1;

  auto side = [&](const ExtState& W, const PhysState& w_star, double T) {
    const double u = velocity(W.w, c);
    const double u_star = is_wet(w_star, c) ? w_star.q / w_star.h : u;
    return Fh * (c.g * (W.w.h - w_star.h - W.H + Hs) + 0.5 * u_star * u_star - 0.5 * u * u) +
           (u - u_star) * (Fq - pressure(w_star.h, c)) + u * T;
  };
  out.E_l = side(W_l, iface.w_minus, T_minus);
  out.E_r = side(W_r, iface.w_plus, T_plus);
  out.satisfied = out.E_l >= -tol && out.E_r <= tol;
  return out;
}

double entropy_production_total(const SimState& before, const SimState& after,
                                const GhostCells& ghosts, double dt, double dx,
                                const PhysConstants& c) {
  require_same_length(before.w.size(), after.w.size());
  const int n = before.size();
  double change = 0.0;
  for (int i = 0; i < n; ++i) {
    change += entropy_pair(after.cell(i), c).eta - entropy_pair(before.cell(i), c).eta;
  }
  const double G_left = numerical_entropy_flux(ghosts.left, before.cell(0), dx, dt, c);
  const double G_right = numerical_entropy_flux(before.cell(n - 1), ghosts.right, dx, dt, c);
  return change * dx / dt + G_right - G_left;
}

ConvergenceResult convergence_study(const SpecFamily& family, const SchemeConfig& cfg,
                                    const ExactOracle& exact, double bound,
                                    std::span<const int> ladder, const PhysConstants& c) {
  std::vector<std::future<ConvergenceRow>> jobs;
  for (int n : ladder) {
    jobs.push_back(std::async(std::launch::async, [&, n] {
      ConvergenceRow row;
      row.n_cells = n;
      try {
        const SimSpec spec = family(n);
        const RunReport rep = run(spec, cfg, c);
        const auto ref = exact(spec.grid);
        row.l1_error = l1_error(rep.final_state.w, ref, spec.grid.dx());
        row.steady_reached = rep.diag.steady_reached;
        row.met_bound = row.l1_error <= bound;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      return row;
    }));
  }
  ConvergenceResult out;
  for (auto& j : jobs) out.rows.push_back(j.get());
  for (const auto& row : out.rows) {
    if (row.error.empty() && row.met_bound) {
      out.cells_needed = row.n_cells;
      break;
    }
  }
  return out;
}

}  // namespace swelab
