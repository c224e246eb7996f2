#include "swelab_cli/report.hpp"

#include <cstdio>

#include "swelab/physics.hpp"

namespace swelab::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::ordered_json stop_json(const StopRule& s) {
  nlohmann::ordered_json j;
  j["final_time"] = s.final_time;
  j["until_steady"] = s.until_steady;
  j["steady_tol"] = s.steady_tol;
  j["max_steps"] = s.max_steps;
  return j;
}

}  // namespace

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

void write_snapshot_csv(std::ostream& os, const SimState& state, const Grid& grid,
                        const PhysConstants& c) {
  os << "x,H,h,q,eta,u,fr2\n";
  for (int i = 0; i < state.size(); ++i) {
    const PhysState& w = state.w[i];
    const double u = velocity(w, c);
    const double fr2 = is_wet(w, c) ? froude_squared(w, c) : 0.0;
    os << fmt(grid.center(i)) << ',' << fmt(state.H[i]) << ',' << fmt(w.h) << ',' << fmt(w.q) << ','
       << fmt(w.h - state.H[i]) << ',' << fmt(u) << ',' << fmt(fr2) << '\n';
  }
}

nlohmann::ordered_json summary_json(const Preset& preset, const RunReport& rep,
                                    const PhysConstants& c) {
  nlohmann::ordered_json j;
  j["test"] = preset.id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : preset.params) params[k] = v;
  j["params"] = params;

  const SchemeConfig& cfg = rep.cfg;
  nlohmann::ordered_json config;
  config["scheme"] = std::string(to_string(cfg.scheme));
  config["cells"] = rep.grid.n_cells;
  config["x_left"] = rep.grid.x_left;
  config["x_right"] = rep.grid.x_right;
  config["cfl"] = cfg.cfl;
  config["eps"] = cfg.sonic.eps;
  config["reg"] = std::string(to_string(cfg.sonic.mode));
  config["gate"] = std::string(to_string(cfg.gate));
  const auto flux = hr_flux_of(cfg);
  config["hr_flux"] = flux ? nlohmann::ordered_json(std::string(to_string(*flux))) : nlohmann::ordered_json();
  config["harten_delta"] = cfg.harten_delta;
  config["omega_source_form"] = std::string(to_string(rep.omega_form));
  config["g"] = c.g;
  config["h_dry"] = c.h_dry;
  config["stop"] = stop_json(preset.spec.stop);
  j["config"] = config;

  const RunDiagnostics& d = rep.diag;
  nlohmann::ordered_json result;
  result["steps"] = d.steps;
  result["final_time"] = d.final_time;
  result["steady_reached"] = d.steady_reached;
  result["initial_residual"] = d.initial_residual;
  result["final_residual"] = d.final_residual;
  result["clip_events"] = d.totals.clip_events;
  result["deep_clip_events"] = d.totals.deep_clip_events;
  result["min_h_before_clip"] = d.totals.min_h_before_clip;
  result["sonic_interfaces"] = d.totals.sonic_interfaces;
  result["large_step_interfaces"] = d.totals.large_step_interfaces;
  result["final_large_steps"] = d.final_large_steps;
  result["gate_evaluations"] = d.totals.gate_evaluations;
  result["gate_passes"] = d.totals.gate_passes;
  if (d.entropy_tracked) {
    nlohmann::ordered_json e;
    e["max_production"] = d.max_entropy_production;
    e["checks_regular"] = d.entropy_checks_regular;
    e["violations_regular"] = d.entropy_violations_regular;
    e["checks_large_step"] = d.entropy_checks_large_step;
    e["violations_large_step"] = d.entropy_violations_large_step;
    result["entropy"] = e;
  }
  j["result"] = result;

  nlohmann::ordered_json probes = nlohmann::ordered_json::array();
  for (const auto& p : rep.probes) {
    nlohmann::ordered_json pj;
    pj["name"] = p.name;
    pj["x"] = p.x;
    pj["cell"] = p.cell;
    pj["cell_x"] = rep.grid.center(p.cell);
    pj["H"] = p.H;
    pj["h"] = p.w.h;
    pj["q"] = p.w.q;
    probes.push_back(pj);
  }
  j["probes"] = probes;

  nlohmann::ordered_json exact;
  if (preset.exact_h_r) exact["h_r"] = *preset.exact_h_r;
  if (!preset.exact_error.empty()) exact["h_r_error"] = preset.exact_error;
  if (preset.exact) {
    try {
      const auto ref = (*preset.exact)(rep.grid);
      exact["l1_error_h"] = l1_error(rep.final_state.w, ref, rep.grid.dx());
      exact["l1_error_q"] = l1_error_q(rep.final_state.w, ref, rep.grid.dx());
    } catch (const std::exception& e) {
      exact["profile_error"] = e.what();
    }
  }
  j["exact"] = exact.is_null() ? nlohmann::ordered_json::object() : exact;
  return j;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "param,value,scheme,h_l,h_r,exact_h_r,steady_residual,met_steady,error\n";
  for (const auto& r : rows) {
    os << r.param << ',' << fmt(r.value) << ',' << r.scheme << ',' << fmt(r.h_l) << ',' << fmt(r.h_r)
       << ',' << fmt(r.exact_h_r) << ',' << (r.error.empty() ? fmt(r.steady_residual) : "") << ','
       << (r.met_steady ? "true" : "false") << ',' << csv_field(r.error) << '\n';
  }
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records) {
  if (records.empty()) return;
  os << "scheme";
  for (const auto& [k, v] : records.front().params) os << ',' << k;
  os << ",n_cells,l1_error,met_bound,steady_reached,error\n";
  for (const auto& rec : records) {
    for (const auto& row : rec.result.rows) {
      os << rec.scheme;
      for (const auto& [k, v] : rec.params) os << ',' << fmt(v);
      os << ',' << row.n_cells << ',' << (row.error.empty() ? fmt(row.l1_error) : "") << ','
         << (row.met_bound ? "true" : "false") << ',' << (row.steady_reached ? "true" : "false")
         << ',' << csv_field(row.error) << '\n';
    }
  }
}

void write_cells_needed_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records) {
  if (records.empty()) return;
  os << "scheme";
  for (const auto& [k, v] : records.front().params) os << ',' << k;
  os << ",cells_needed\n";
  for (const auto& rec : records) {
    os << rec.scheme;
    for (const auto& [k, v] : rec.params) os << ',' << fmt(v);
    os << ',' << (rec.result.cells_needed ? std::to_string(*rec.result.cells_needed) : "not reached")
       << '\n';
  }
}

}  // namespace swelab::cli
