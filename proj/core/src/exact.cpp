#include "swelab/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swelab/physics.hpp"

namespace swelab {

namespace {

constexpr double kNearCriticalBand = 1e-6;
constexpr double kLevelTolerance = 1e-12;

double specific_head(double h, double q, const PhysConstants& c) {
  return h + q * q / (2.0 * c.g * h * h);
}

}  // namespace

FlowBranch flow_branch(const PhysState& w, const PhysConstants& c) {
  const double fr2 = froude_squared(w, c);
  if (std::abs(fr2 - 1.0) < kNearCriticalBand) {
    throw Error(ErrorCode::NearCritical, "near-critical, branch ambiguous (Fr^2 = " +
                                             std::to_string(fr2) + ")");
  }
  return fr2 > 1.0 ? FlowBranch::Supercritical : FlowBranch::Subcritical;
}

double solve_invariant_depth(double q, double level, FlowBranch branch, const PhysConstants& c) {
  if (q == 0.0) {
    if (level < 0.0) {
      throw Error(ErrorCode::NoAdmissibleRoot, "no admissible root: negative still-water level");
    }
    return level;
  }

  const double h_crit = std::cbrt(q * q / c.g);
  const double head_min = specific_head(h_crit, q, c);
  if (level < head_min) {
    if (head_min - level <= kLevelTolerance * std::max(1.0, head_min)) return h_crit;
    throw Error(ErrorCode::NoAdmissibleRoot,
                "no admissible root: level " + std::to_string(level) +
                    " below critical minimum " + std::to_string(head_min));
  }

  // phi is decreasing on (0, h_crit] and increasing on [h_crit, inf).
  double lo = 0.0;
  double hi = 0.0;
  if (branch == FlowBranch::Supercritical) {
    // phi(h) > q^2/(2 g h^2) = level at h = |q| / sqrt(2 g level).
    lo = std::min(h_crit, std::abs(q) / std::sqrt(2.0 * c.g * level));
    hi = h_crit;
  } else {
    lo = h_crit;
    hi = std::max(h_crit, level);  // phi(level) > level
  }

  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = specific_head(mid, q, c) - level;
    const bool root_above = (branch == FlowBranch::Supercritical) ? (f > 0.0) : (f < 0.0);
    if (root_above) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double f_lo = std::abs(specific_head(lo, q, c) - level);
  const double f_hi = std::abs(specific_head(hi, q, c) - level);
  return f_lo <= f_hi ? lo : hi;
}

PhysState exact_step_state(const ExtState& W_l, double H_r, const PhysConstants& c) {
  const Vec2 inv = riemann_invariant(W_l, c);
  const FlowBranch branch = W_l.w.q == 0.0 ? FlowBranch::Subcritical : flow_branch(W_l.w, c);
  const double h_r = solve_invariant_depth(inv.x0, inv.x1 + H_r, branch, c);
  return {h_r, inv.x0};
}

std::vector<PhysState> exact_smooth_profile(const std::function<double(double)>& bathymetry,
                                            const ExtState& inlet, std::span<const double> xs,
                                            const PhysConstants& c) {
  const Vec2 inv = riemann_invariant(inlet, c);
  const FlowBranch branch = inlet.w.q == 0.0 ? FlowBranch::Subcritical : flow_branch(inlet.w, c);
  std::vector<PhysState> out;
  out.reserve(xs.size());
  for (double x : xs) {
    try {
      out.push_back({solve_invariant_depth(inv.x0, inv.x1 + bathymetry(x), branch, c), inv.x0});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoAdmissibleRoot) throw;
      throw Error(ErrorCode::TranscriticalProfile,
                  "transcritical profile: no root on the inlet branch at x = " + std::to_string(x));
    }
  }
  return out;
}

}  // namespace swelab
