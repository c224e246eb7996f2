#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "swelab_cli/presets.hpp"
#include "swelab_cli/report.hpp"

namespace swelab::cli {

/// Bad flags or values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "name=value" -> (name, value).
std::pair<std::string, double> parse_param(const std::string& text);

/// "time=T", "steady" or "steady=TMAX". `fallback` supplies the default
/// maximum time for the steady forms.
StopRule parse_until(const std::string& text, const StopRule& fallback);

/// "name=v1,v2,..." or "name=start:stop:step" (inclusive of stop).
std::pair<std::string, std::vector<double>> parse_sweep(const std::string& text);

std::vector<int> parse_int_list(const std::string& text);
std::vector<std::string> split(const std::string& text, char sep);

struct SweepRequest {
  int test = 1;
  ParamMap base;
  std::string param;
  std::vector<double> values;
  std::vector<SchemeConfig> configs;
  std::optional<int> cells;
  std::optional<std::string> until;
};

/// One run per (value, scheme), concurrently; rows come back ordered by
/// value then scheme. Failed runs become rows with the error filled in.
std::vector<SweepRow> run_sweep(const SweepRequest& req, const PhysConstants& c = {});

struct ConvergenceRequest {
  int test = 6;
  ParamMap base;
  std::optional<std::pair<std::string, std::vector<double>>> sweep;
  std::vector<SchemeConfig> configs;
  std::vector<int> ladder;
  double bound = 0.008;
};

std::vector<ConvergenceRecord> run_convergence(const ConvergenceRequest& req,
                                               const PhysConstants& c = {});

/// Full command-line entry point. Returns 0 on success, 1 on runtime
/// failure and 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swelab::cli
