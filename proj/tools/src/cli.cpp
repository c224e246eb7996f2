#include "swelab_cli/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include <CLI11.hpp>

namespace swelab::cli {

namespace fs = std::filesystem;

namespace {

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad number '" + text + "' in " + what);
  }
}

struct Options {
  std::optional<int> test;
  std::string scheme = "hr";
  std::optional<int> cells;
  double cfl = 0.9;
  double eps = SonicRegularization{}.eps;
  std::string reg = "mu";
  std::string gate = "dimensional";
  std::optional<std::string> flux;
  std::vector<std::string> params;
  std::optional<std::string> until;
  std::string out = ".";
  std::optional<std::string> sweep;
  std::optional<std::string> schemes;
  double bound = 0.008;
  std::optional<std::string> ladder;
  bool full_ladder = false;
};

template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

SchemeConfig base_config(const Options& o) {
  return as_usage([&] {
    SchemeConfig cfg;
    cfg.cfl = o.cfl;
    cfg.sonic = {parse_sonic_mode(o.reg), o.eps};
    cfg.gate = parse_gate_policy(o.gate);
    if (o.flux) cfg.hr_flux = parse_flux_kind(*o.flux);
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw UsageError("--cfl must lie in (0, 1]");
    if (!(cfg.sonic.eps > 0.0)) throw UsageError("--eps must be positive");
    return cfg;
  });
}

std::vector<SchemeConfig> scheme_configs(const Options& o) {
  const SchemeConfig base = base_config(o);
  std::vector<SchemeConfig> out;
  if (o.schemes) {
    for (const auto& name : split(*o.schemes, ',')) {
      SchemeConfig cfg = base;
      cfg.scheme = as_usage([&] { return parse_scheme(name); });
      out.push_back(cfg);
    }
  } else {
    for (SchemeId id : implemented_schemes()) {
      SchemeConfig cfg = base;
      cfg.scheme = id;
      out.push_back(cfg);
    }
  }
  if (out.empty()) throw UsageError("--schemes is empty");
  return out;
}

ParamMap param_map(const Options& o) {
  ParamMap m;
  for (const auto& p : o.params) {
    const auto [k, v] = parse_param(p);
    m[k] = v;
  }
  return m;
}

int require_test(const Options& o) {
  if (!o.test) throw UsageError("--test is required");
  return *o.test;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir + ": " + ec.message());
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  return f;
}

int cmd_run(const Options& o, std::ostream& out) {
  const int test = require_test(o);
  SchemeConfig cfg = base_config(o);
  cfg.scheme = as_usage([&] { return parse_scheme(o.scheme); });
  const PhysConstants c;
  Preset preset = as_usage([&] { return build_preset(test, param_map(o), o.cells); });
  if (o.until) preset.spec.stop = parse_until(*o.until, preset.spec.stop);

  const RunReport rep = run(preset.spec, cfg, c);

  ensure_dir(o.out);
  const fs::path dir(o.out);
  {
    auto f = open_out(dir / "snapshot_initial.csv");
    write_snapshot_csv(f, initial_state(preset.spec, c), rep.grid, c);
  }
  {
    auto f = open_out(dir / "snapshot_final.csv");
    write_snapshot_csv(f, rep.final_state, rep.grid, c);
  }
  {
    auto f = open_out(dir / "residuals.csv");
    f << "step,residual\n";
    for (std::size_t i = 0; i < rep.residual_history.size(); ++i) {
      f << i + 1 << ',' << fmt(rep.residual_history[i]) << '\n';
    }
  }
  {
    auto f = open_out(dir / "summary.json");
    f << summary_json(preset, rep, c).dump(2) << '\n';
  }

  out << "test=" << test << " scheme=" << to_string(cfg.scheme) << " cells=" << rep.grid.n_cells
      << " steps=" << rep.diag.steps << " t=" << fmt(rep.diag.final_time)
      << " steady=" << (rep.diag.steady_reached ? "yes" : "no")
      << " residual=" << fmt(rep.diag.final_residual) << " clips=" << rep.diag.totals.clip_events;
  for (const auto& p : rep.probes) out << ' ' << p.name << '=' << fmt(p.w.h);
  if (preset.exact_h_r) out << " exact_h_r=" << fmt(*preset.exact_h_r);
  out << '\n';
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (!o.sweep) throw UsageError("sweep needs --sweep NAME=VALUES");
  SweepRequest req;
  req.test = require_test(o);
  req.base = param_map(o);
  std::tie(req.param, req.values) = parse_sweep(*o.sweep);
  req.configs = scheme_configs(o);
  req.cells = o.cells;
  req.until = o.until;
  as_usage([&] { return build_preset(req.test, req.base, o.cells); });
  if (o.until) parse_until(*o.until, StopRule{});

  const auto rows = run_sweep(req);
  ensure_dir(o.out);
  auto f = open_out(fs::path(o.out) / "sweep.csv");
  write_sweep_csv(f, rows);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += !r.error.empty();
  out << "sweep " << req.param << ": " << rows.size() << " rows, " << failed << " failed\n";
  return 0;
}

int cmd_convergence(const Options& o, std::ostream& out) {
  ConvergenceRequest req;
  req.test = o.test.value_or(6);
  req.base = param_map(o);
  if (o.sweep) req.sweep = parse_sweep(*o.sweep);
  req.configs = scheme_configs(o);
  req.bound = o.bound;
  if (o.ladder) {
    req.ladder = parse_int_list(*o.ladder);
  } else if (o.full_ladder) {
    req.ladder.assign(kFullMeshLadder.begin(), kFullMeshLadder.end());
  } else {
    req.ladder.assign(kDeskMeshLadder.begin(), kDeskMeshLadder.end());
  }
  if (req.ladder.empty()) throw UsageError("mesh ladder is empty");
  const Preset probe = as_usage([&] { return build_preset(req.test, req.base); });
  if (!probe.exact) throw UsageError("test " + std::to_string(req.test) + " has no exact steady profile");

  const auto records = run_convergence(req);
  ensure_dir(o.out);
  {
    auto f = open_out(fs::path(o.out) / "convergence.csv");
    write_convergence_csv(f, records);
  }
  {
    auto f = open_out(fs::path(o.out) / "cells_needed.csv");
    write_cells_needed_csv(f, records);
  }
  for (const auto& rec : records) {
    out << rec.scheme;
    for (const auto& [k, v] : rec.params) out << ' ' << k << '=' << fmt(v);
    out << " cells_needed="
        << (rec.result.cells_needed ? std::to_string(*rec.result.cells_needed) : "not-reached") << '\n';
  }
  return 0;
}

int cmd_list(std::ostream& out) {
  for (const auto& info : scheme_catalog()) {
    out << info.name << (info.implemented ? "" : " [not implemented]") << "\t" << info.description << '\n';
  }
  return 0;
}

}  // namespace

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<std::string, double> parse_param(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected NAME=VALUE, got '" + text + "'");
  return {text.substr(0, eq), parse_number(text.substr(eq + 1), "--param " + text)};
}

StopRule parse_until(const std::string& text, const StopRule& fallback) {
  StopRule s = fallback;
  if (text == "steady") {
    s.until_steady = true;
    return s;
  }
  const auto eq = text.find('=');
  const std::string key = text.substr(0, eq);
  if (eq == std::string::npos || (key != "time" && key != "steady")) {
    throw UsageError("--until expects time=T, steady or steady=TMAX, got '" + text + "'");
  }
  const double t = parse_number(text.substr(eq + 1), "--until");
  if (!(t >= 0.0)) throw UsageError("--until time must be nonnegative");
  s.final_time = t;
  s.until_steady = key == "steady";
  return s;
}

std::pair<std::string, std::vector<double>> parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected NAME=VALUES, got '" + text + "'");
  const std::string name = text.substr(0, eq);
  const std::string rest = text.substr(eq + 1);
  std::vector<double> values;
  if (rest.find(':') != std::string::npos) {
    const auto parts = split(rest, ':');
    if (parts.size() != 3) throw UsageError("range must be start:stop:step, got '" + rest + "'");
    const double a = parse_number(parts[0], "--sweep");
    const double b = parse_number(parts[1], "--sweep");
    const double step = parse_number(parts[2], "--sweep");
    if (step == 0.0 || (b - a) / step < 0.0) throw UsageError("sweep range does not progress: " + rest);
    const long n = std::lround(std::floor((b - a) / step + 1e-9)) + 1;
    for (long k = 0; k < n; ++k) values.push_back(a + static_cast<double>(k) * step);
  } else {
    for (const auto& v : split(rest, ',')) values.push_back(parse_number(v, "--sweep"));
  }
  if (values.empty()) throw UsageError("sweep value list for '" + name + "' is empty");
  return {name, values};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& v : split(text, ',')) {
    const double d = parse_number(v, "integer list");
    if (d != std::floor(d) || d < 2) throw UsageError("bad mesh size '" + v + "'");
    out.push_back(static_cast<int>(d));
  }
  return out;
}

std::vector<SweepRow> run_sweep(const SweepRequest& req, const PhysConstants& c) {
  if (req.values.empty()) throw UsageError("sweep value list is empty");
  std::vector<std::future<SweepRow>> jobs;
  for (double value : req.values) {
    for (const SchemeConfig& cfg : req.configs) {
      jobs.push_back(std::async(std::launch::async, [&req, &c, value, cfg] {
        SweepRow row;
        row.param = req.param;
        row.value = value;
        row.scheme = std::string(to_string(cfg.scheme));
        try {
          ParamMap params = req.base;
          std::optional<int> cells = req.cells;
          if (req.param == "cells") {
            cells = static_cast<int>(std::lround(value));
          } else {
            params[req.param] = value;
          }
          Preset preset = build_preset(req.test, params, cells, {}, c);
          if (req.until) preset.spec.stop = parse_until(*req.until, preset.spec.stop);
          row.exact_h_r = preset.exact_h_r;
          const RunReport rep = run(preset.spec, cfg, c);
          for (const auto& p : rep.probes) {
            if (p.name == "h_l") row.h_l = p.w.h;
            if (p.name == "h_r") row.h_r = p.w.h;
          }
          row.steady_residual = rep.diag.final_residual;
          row.met_steady = rep.diag.steady_reached;
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        return row;
      }));
    }
  }
  std::vector<SweepRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

std::vector<ConvergenceRecord> run_convergence(const ConvergenceRequest& req, const PhysConstants& c) {
  std::vector<ParamMap> points;
  if (req.sweep) {
    for (double v : req.sweep->second) {
      ParamMap p = req.base;
      p[req.sweep->first] = v;
      points.push_back(p);
    }
  } else {
    points.push_back(req.base);
  }
  std::vector<std::future<ConvergenceRecord>> jobs;
  for (const ParamMap& point : points) {
    for (const SchemeConfig& cfg : req.configs) {
      jobs.push_back(std::async(std::launch::async, [&req, &c, point, cfg] {
        ConvergenceRecord rec;
        rec.scheme = std::string(to_string(cfg.scheme));
        try {
          const Preset preset = build_preset(req.test, point, {}, {}, c);
          rec.params = preset.params;
          if (!preset.exact) throw Error(ErrorCode::InvalidArgument, "no exact profile for this test");
          const SpecFamily family = [&req, &c, point](int n) {
            return build_preset(req.test, point, n, {}, c).spec;
          };
          rec.result = convergence_study(family, cfg, *preset.exact, req.bound, req.ladder, c);
        } catch (const std::exception& e) {
          rec.params = point;
          for (int n : req.ladder) rec.result.rows.push_back({n, 0.0, false, false, e.what()});
        }
        return rec;
      }));
    }
  }
  std::vector<ConvergenceRecord> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-order finite-volume laboratory for the 1D shallow-water equations", "swelab"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read `key = value` defaults from FILE (flags override)");

  Options o;
  app.add_option("--test", o.test, "test preset 1..6")->check(CLI::Range(1, 6));
  app.add_option("--scheme", o.scheme, "scheme name (see list-schemes)");
  app.add_option("--schemes", o.schemes, "comma-separated schemes for sweep/convergence (default: all)");
  app.add_option("--cells", o.cells, "number of cells")->check(CLI::Range(2, 100000000));
  app.add_option("--cfl", o.cfl, "CFL number in (0, 1]");
  app.add_option("--eps", o.eps, "sonic regularization threshold");
  app.add_option("--reg", o.reg, "sonic regularization: mu | mu-as-printed | star");
  app.add_option("--gate", o.gate, "energy gate: dimensional | as-printed");
  app.add_option("--flux", o.flux, "homogeneous flux for the reconstruction schemes: roe|force|gforce|lf|lw");
  app.add_option("--param", o.params, "preset parameter NAME=VALUE (repeatable)");
  app.add_option("--until", o.until, "stop rule: time=T | steady | steady=TMAX");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--sweep", o.sweep, "swept parameter NAME=v1,v2,... or NAME=start:stop:step");
  app.add_option("--bound", o.bound, "L1 error bound for convergence");
  app.add_option("--ladder", o.ladder, "comma-separated mesh sizes for convergence");
  app.add_flag("--full-ladder", o.full_ladder, "use meshes up to 12800 cells");

  auto* run_cmd = app.add_subcommand("run", "run one preset with one scheme")->fallthrough();
  auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep over several schemes")->fallthrough();
  auto* conv_cmd =
      app.add_subcommand("convergence", "L1 error against the exact profile on a mesh ladder")->fallthrough();
  auto* list_cmd = app.add_subcommand("list-schemes", "list scheme names")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(o, out);
    if (sweep_cmd->parsed()) return cmd_sweep(o, out);
    if (conv_cmd->parsed()) return cmd_convergence(o, out);
    if (list_cmd->parsed()) return cmd_list(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace swelab::cli
