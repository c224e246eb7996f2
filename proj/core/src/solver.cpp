#include "swelab/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "swelab/diagnostics.hpp"

namespace swelab {

int Grid::nearest_cell(double x) const {
  const int i = static_cast<int>(std::floor((x - x_left) / dx()));
  return std::clamp(i, 0, n_cells - 1);
}

void Grid::validate() const {
  if (n_cells < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 cells");
  if (!(x_right > x_left)) throw Error(ErrorCode::InvalidArgument, "grid bounds must satisfy x_left < x_right");
}

void StepStats::merge(const StepStats& s) {
  clip_events += s.clip_events;
  deep_clip_events += s.deep_clip_events;
  min_h_before_clip = std::min(min_h_before_clip, s.min_h_before_clip);
  sonic_interfaces += s.sonic_interfaces;
  large_step_interfaces += s.large_step_interfaces;
  gate_evaluations += s.gate_evaluations;
  gate_passes += s.gate_passes;
}

SimState initial_state(const SimSpec& spec, const PhysConstants& c) {
  spec.grid.validate();
  SimState s;
  const int n = spec.grid.n_cells;
  s.w.resize(n);
  s.H.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = spec.grid.center(i);
    s.H[i] = spec.bathymetry(x);
    PhysState w = spec.initial(x, s.H[i]);
    if (w.h < 0.0) throw Error(ErrorCode::NegativeDepth, "initial data has h < 0 at x = " + std::to_string(x));
    if (!is_wet(w, c)) w.q = 0.0;
    s.w[i] = w;
  }
  return s;
}

double cfl_dt(const SimState& state, const SchemeConfig& cfg, const Grid& grid,
              const PhysConstants& c, std::span<const ExtState> extra) {
  double speed = 0.0;
  bool any_wet = false;
  auto visit = [&](const PhysState& w) {
    if (!is_wet(w, c)) return;
    any_wet = true;
    speed = std::max(speed, std::abs(w.q / w.h) + std::sqrt(c.g * w.h));
  };
  for (const auto& w : state.w) visit(w);
  for (const auto& W : extra) visit(W.w);
  if (!any_wet) throw Error(ErrorCode::AllDry, "cfl_dt: every cell is dry");
  return cfg.cfl * grid.dx() / speed;
}

GhostCells apply_boundaries(const SimState& state, const BoundaryConditions& bc) {
  const int n = state.size();
  auto ghost = [&](const SideCondition& side, int inner, int wrap) {
    ExtState g = state.cell(inner);
    switch (side.kind) {
      case BoundaryKind::Open:
        break;
      case BoundaryKind::ImposedDischarge:
        g.w.q = side.q;
        break;
      case BoundaryKind::ImposedDepth:
        g.w.h = side.h;
        break;
      case BoundaryKind::ImposedBoth:
        g.w = {side.h, side.q};
        break;
      case BoundaryKind::Periodic:
        g = state.cell(wrap);
        break;
    }
    return g;
  };
  return {ghost(bc.left, 0, n - 1), ghost(bc.right, n - 1, 0)};
}

std::vector<InterfaceTerms> compute_interface_terms(const SimState& state, const GhostCells& ghosts,
                                                    const SchemeConfig& cfg, double dx, double dt,
                                                    const PhysConstants& c) {
  const int n = state.size();
  std::vector<InterfaceTerms> terms(n + 1);
  auto cell = [&](int i) -> ExtState {
    if (i < 0) return ghosts.left;
    if (i >= n) return ghosts.right;
    return state.cell(i);
  };
  // Interface k sits between cells k-1 and k.
  for (int k = 0; k <= n; ++k) {
    terms[k] = interface_terms(cell(k - 1), cell(k), cfg, dx, dt, c);
  }
  return terms;
}

SimState assemble_update(const SimState& state, std::span<const InterfaceTerms> terms, double dx,
                         double dt, const PhysConstants& c, StepStats* stats) {
  const int n = state.size();
  const double r = dt / dx;
  SimState next;
  next.t = state.t + dt;
  next.H = state.H;
  next.w.resize(n);
  StepStats local;
  for (const auto& t : terms) {
    local.sonic_interfaces += t.sonic;
    local.large_step_interfaces += t.large_step;
    local.gate_evaluations += t.gate_applied;
    local.gate_passes += t.gate_passed;
  }
  for (int i = 0; i < n; ++i) {
    const InterfaceTerms& left = terms[i];
    const InterfaceTerms& right = terms[i + 1];
    const Vec2 w = state.w[i].vec() + r * ((left.flux - right.flux) + (left.source.plus + right.source.minus));
    if (!std::isfinite(w.x0) || !std::isfinite(w.x1)) {
      throw Error(ErrorCode::NonFinite, "non-finite state in cell " + std::to_string(i) + " at t = " +
                                            std::to_string(next.t));
    }
    PhysState out{w.x0, w.x1};
    local.min_h_before_clip = std::min(local.min_h_before_clip, out.h);
    if (out.h < 0.0) {
      ++local.clip_events;
      if (out.h < -c.h_dry) ++local.deep_clip_events;
      out = {0.0, 0.0};
    } else if (!is_wet(out, c)) {
      out.q = 0.0;
    }
    next.w[i] = out;
  }
  if (stats) stats->merge(local);
  return next;
}

SimState step(const SimState& state, const SchemeConfig& cfg, const Grid& grid,
              const BoundaryConditions& bc, double dt, const PhysConstants& c, StepStats* stats) {
  const GhostCells ghosts = apply_boundaries(state, bc);
  const auto terms = compute_interface_terms(state, ghosts, cfg, grid.dx(), dt, c);
  return assemble_update(state, terms, grid.dx(), dt, c, stats);
}

double update_residual(const SimState& before, const SimState& after, double dx, double dt) {
  double sum = 0.0;
  for (int i = 0; i < before.size(); ++i) {
    sum += std::abs(after.w[i].h - before.w[i].h) + std::abs(after.w[i].q - before.w[i].q);
  }
  return sum * dx / dt;
}

namespace {

void track_entropy(const SimState& before, const SimState& after, const GhostCells& ghosts,
                   const SchemeConfig& cfg, double dx, double dt, const PhysConstants& c,
                   RunDiagnostics& diag) {
  const double production = entropy_production_total(before, after, ghosts, dt, dx, c);
  if (!diag.entropy_tracked || production > diag.max_entropy_production) {
    diag.max_entropy_production = production;
  }
  diag.entropy_tracked = true;

  const auto kind = hr_flux_of(cfg);
  if (!kind) return;
  const HomogeneousFlux flux{*kind, cfg.cfl, dx, dt, cfg.harten_delta};
  const int n = before.size();
  auto cell = [&](int i) -> ExtState {
    if (i < 0) return ghosts.left;
    if (i >= n) return ghosts.right;
    return before.cell(i);
  };
  for (int k = 0; k <= n; ++k) {
    const ExtState W_l = cell(k - 1);
    const ExtState W_r = cell(k);
    const HRInterface iface = hr_reconstruct(W_l, W_r, c);
    const Vec2 F = homogeneous_flux(iface.w_minus, iface.w_plus, flux, c);
    HRCorrections t;
    if (cfg.scheme == SchemeId::ModifiedHR) t = modified_hr_corrections(W_l, W_r, iface, cfg.gate, c);
    const EntropyCheck chk = entropy_interface_check(W_l, W_r, iface, F, t.T_minus, t.T_plus, c);
    if (iface.large_step) {
      ++diag.entropy_checks_large_step;
      diag.entropy_violations_large_step += !chk.satisfied;
    } else {
      ++diag.entropy_checks_regular;
      diag.entropy_violations_regular += !chk.satisfied;
    }
  }
}

}  // namespace

RunReport run(const SimSpec& spec, const SchemeConfig& cfg, const PhysConstants& c) {
  cfg.validate();
  RunReport rep;
  rep.label = spec.label;
  rep.cfg = cfg;
  rep.grid = spec.grid;
  rep.omega_form = cfg.omega_form ? *cfg.omega_form : resolve_omega_source_form();

  SimState state = initial_state(spec, c);
  const double dx = spec.grid.dx();
  const double T = spec.stop.final_time;

  std::vector<double> outputs;
  for (double t : spec.output_times) {
    if (t >= 0.0 && t <= T) outputs.push_back(t);
  }
  std::sort(outputs.begin(), outputs.end());
  std::size_t next_output = 0;
  auto flush_outputs = [&] {
    while (next_output < outputs.size() && outputs[next_output] <= state.t) {
      rep.snapshots.push_back(state);
      ++next_output;
    }
  };
  flush_outputs();

  bool have_initial_residual = false;
  while (state.t < T) {
    if (rep.diag.steps >= spec.stop.max_steps) {
      throw Error(ErrorCode::StepLimit, "step limit of " + std::to_string(spec.stop.max_steps) +
                                            " reached at t = " + std::to_string(state.t));
    }
    const GhostCells ghosts = apply_boundaries(state, spec.bc);
    const std::array<ExtState, 2> edge{ghosts.left, ghosts.right};
    double dt = cfl_dt(state, cfg, spec.grid, c, edge);
    double target = T;
    if (next_output < outputs.size()) target = std::min(target, outputs[next_output]);
    bool lands = false;
    if (state.t + dt >= target) {
      dt = target - state.t;
      lands = true;
    }
    if (!(dt > 0.0)) break;

    StepStats stats;
    const auto terms = compute_interface_terms(state, ghosts, cfg, dx, dt, c);
    SimState next = assemble_update(state, terms, dx, dt, c, &stats);
    if (lands) next.t = target;
    rep.diag.totals.merge(stats);
    rep.diag.final_large_steps = stats.large_step_interfaces;

    if (spec.track_entropy) track_entropy(state, next, ghosts, cfg, dx, dt, c, rep.diag);

    const double res = update_residual(state, next, dx, dt);
    rep.residual_history.push_back(res);
    if (!have_initial_residual) {
      rep.diag.initial_residual = res;
      have_initial_residual = true;
    }
    rep.diag.final_residual = res;
    ++rep.diag.steps;
    state = std::move(next);
    flush_outputs();

    if (spec.stop.until_steady &&
        res <= spec.stop.steady_tol * (rep.diag.initial_residual + 1e-30)) {
      rep.diag.steady_reached = true;
      break;
    }
  }

  rep.diag.final_time = state.t;
  for (const auto& p : spec.probes) {
    const int i = spec.grid.nearest_cell(p.x);
    rep.probes.push_back({p.name, p.x, i, state.H[i], state.w[i]});
  }
  rep.final_state = std::move(state);
  return rep;
}

}  // namespace swelab
