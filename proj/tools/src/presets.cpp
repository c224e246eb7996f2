#include "swelab_cli/presets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swelab/exact.hpp"

namespace swelab::cli {

namespace {

const std::vector<ParamInfo> kTest1{
    {"alpha", 16.0, 0.0, 100.0, true, true, "bottom slope in percent, H(x) = alpha/100 x"}};
const std::vector<ParamInfo> kTest2{};
const std::vector<ParamInfo> kTest3{
    {"H_r", 0.45, 0.0, 5.0, false, true, "depth right of the step at x = 0.5"},
    {"q_bc", 0.1, 0.0, 10.0, false, true, "discharge imposed at x = 0"}};
const std::vector<ParamInfo> kTest4{
    {"H_r", 0.4, 0.0, 5.0, false, true, "depth right of the step at x = 0.5"}};
const std::vector<ParamInfo> kTest5{
    {"x_l", 3.75, 0.0, 4.0, true, false, "start of the ramp"},
    {"ramp_as_printed", 0.0, 0.0, 1.0, true, true,
     "1 selects the literal ramp 1 + 2.8/(4 - x_l)(x - x_l) instead of the continuous one"}};
const std::vector<ParamInfo> kTest6{
    {"dH", 0.3, 0.0, 5.0, true, true, "depth increase over the ramp"},
    {"dl", 0.2, 0.0, 4.8, false, true, "ramp length"}};

std::string format_range(const ParamInfo& p) {
  std::ostringstream os;
  os << (p.lo_inclusive ? '[' : '(') << p.lo << ", " << p.hi << (p.hi_inclusive ? ']' : ')');
  return os.str();
}

ParamMap resolve_params(int id, const ParamMap& overrides) {
  const auto& infos = preset_params(id);
  ParamMap out;
  for (const auto& p : infos) out[p.name] = p.default_value;
  for (const auto& [name, value] : overrides) {
    auto it = std::find_if(infos.begin(), infos.end(), [&](const ParamInfo& p) { return p.name == name; });
    if (it == infos.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "test " + std::to_string(id) + " has no parameter '" + name + "'");
    }
    const bool lo_ok = it->lo_inclusive ? value >= it->lo : value > it->lo;
    const bool hi_ok = it->hi_inclusive ? value <= it->hi : value < it->hi;
    if (!std::isfinite(value) || !lo_ok || !hi_ok) {
      std::ostringstream os;
      os << "parameter " << name << " = " << value << " outside " << format_range(*it);
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
    out[name] = value;
  }
  return out;
}

StopRule steady_until(double max_time) {
  StopRule s;
  s.final_time = max_time;
  s.until_steady = true;
  return s;
}

std::vector<double> centers(const Grid& g) {
  std::vector<double> xs(g.n_cells);
  for (int i = 0; i < g.n_cells; ++i) xs[i] = g.center(i);
  return xs;
}

ExactOracle smooth_oracle(std::function<double(double)> bathy, ExtState inlet, PhysConstants c) {
  return [bathy = std::move(bathy), inlet, c](const Grid& g) {
    const auto xs = centers(g);
    return exact_smooth_profile(bathy, inlet, xs, c);
  };
}

// Probes on the fifth cell either side of a step aligned with an interface.
void add_step_probes(SimSpec& spec, double x_before, double x_after) {
  const double dx = spec.grid.dx();
  spec.probes.push_back({"h_l", x_before - 4.5 * dx});
  spec.probes.push_back({"h_r", x_after + 4.5 * dx});
}

void step_test(Preset& p, double H_left, double q_ic, double q_bc, const PhysConstants& c) {
  const double H_r = p.params.at("H_r");
  SimSpec& s = p.spec;
  s.grid = {0.0, 1.0, s.grid.n_cells};
  s.bathymetry = [H_left, H_r](double x) { return x < 0.5 ? H_left : H_r; };
  s.initial = [q_ic](double, double) { return PhysState{0.1, q_ic}; };
  s.bc = {SideCondition::both(0.1, q_bc), SideCondition::open()};
  // Near-critical inflow (Fr^2 ~ 1.02 at q = 0.1) relaxes slowly.
  s.stop = steady_until(1000.0);
  add_step_probes(s, 0.5, 0.5);

  const ExtState W_l{{0.1, q_bc}, H_left};
  try {
    p.exact_h_r = exact_step_state(W_l, H_r, c).h;
  } catch (const Error& e) {
    p.exact_error = e.what();
  }
  p.exact = [W_l, H_r, c](const Grid& g) {
    const PhysState right = exact_step_state(W_l, H_r, c);
    std::vector<PhysState> out(g.n_cells);
    for (int i = 0; i < g.n_cells; ++i) out[i] = g.center(i) < 0.5 ? W_l.w : right;
    return out;
  };
}

}  // namespace

const std::vector<ParamInfo>& preset_params(int id) {
  switch (id) {
    case 1: return kTest1;
    case 2: return kTest2;
    case 3: return kTest3;
    case 4: return kTest4;
    case 5: return kTest5;
    case 6: return kTest6;
    default:
      throw Error(ErrorCode::InvalidArgument, "unknown test " + std::to_string(id) + " (expected 1..6)");
  }
}

int default_cells(int id) {
  preset_params(id);
  return id == 1 ? 50 : 200;
}

Preset build_preset(int id, const ParamMap& overrides, std::optional<int> n_cells,
                    std::optional<StopRule> stop, const PhysConstants& c) {
  Preset p;
  p.id = id;
  p.params = resolve_params(id, overrides);
  SimSpec& s = p.spec;
  s.label = "test" + std::to_string(id);
  s.grid.n_cells = n_cells ? *n_cells : default_cells(id);
  if (s.grid.n_cells < 2) throw Error(ErrorCode::InvalidArgument, "cells must be at least 2");

  switch (id) {
    case 1: {
      const double slope = p.params.at("alpha") / 100.0;
      s.grid = {0.0, 3.0, s.grid.n_cells};
      s.bathymetry = [slope](double x) { return slope * x; };
      s.initial = [](double, double) { return PhysState{0.02, 0.01}; };
      s.bc = {SideCondition::both(0.02, 0.01), SideCondition::open()};
      s.stop = steady_until(200.0);
      p.exact = smooth_oracle(s.bathymetry, {{0.02, 0.01}, 0.0}, c);
      break;
    }
    case 2: {
      s.grid = {0.0, 25.0, s.grid.n_cells};
      s.bathymetry = [](double x) {
        return (x > 8.0 && x < 12.0) ? -0.2 + 0.05 * (x - 10.0) * (x - 10.0) : 0.0;
      };
      s.initial = [](double, double) { return PhysState{0.33, 0.18}; };
      s.bc = {SideCondition::discharge(0.18), SideCondition::depth(0.33)};
      s.stop = steady_until(1000.0);
      break;
    }
    case 3:
      step_test(p, 0.1, 0.15, p.params.at("q_bc"), c);
      break;
    case 4:
      step_test(p, 0.8, 0.15, 0.15, c);
      break;
    case 5: {
      const double x_l = p.params.at("x_l");
      const bool literal = p.params.at("ramp_as_printed") != 0.0;
      const double rise = literal ? 2.8 : -0.8;
      s.grid = {0.0, 5.0, s.grid.n_cells};
      s.bathymetry = [x_l, rise](double x) {
        if (x < x_l) return 1.0;
        if (x < 4.0) return 1.0 + rise / (4.0 - x_l) * (x - x_l);
        return 0.2;
      };
      s.initial = [](double, double H) {
        const double h = std::max(H - 0.9, 0.0);
        return PhysState{h, h > 0.0 ? 0.9 : 0.0};
      };
      s.bc = {SideCondition::both(0.1, 0.9), SideCondition::open()};
      s.stop.final_time = 2.5;
      s.output_times = {2.5};
      add_step_probes(s, x_l, 4.0);
      p.exact = smooth_oracle(s.bathymetry, {{0.1, 0.9}, 1.0}, c);
      break;
    }
    case 6: {
      const double dH = p.params.at("dH");
      const double x_r = 0.2 + p.params.at("dl");
      const double H_r = 0.1 + dH;
      s.grid = {0.0, 5.0, s.grid.n_cells};
      s.bathymetry = [x_r, H_r](double x) {
        if (x <= 0.2) return 0.1;
        if (x <= x_r) return 0.1 + (H_r - 0.1) / (x_r - 0.2) * (x - 0.2);
        return H_r;
      };
      s.initial = [](double, double) { return PhysState{0.5, 1.2}; };
      s.bc = {SideCondition::both(0.5, 1.2), SideCondition::open()};
      s.stop = steady_until(50.0);
      p.exact = smooth_oracle(s.bathymetry, {{0.5, 1.2}, 0.1}, c);
      break;
    }
    default:
      preset_params(id);
  }
  if (stop) s.stop = *stop;
  s.grid.validate();
  return p;
}

}  // namespace swelab::cli
