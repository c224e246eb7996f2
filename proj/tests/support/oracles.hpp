#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the solver code it is meant to check.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "swelab/state.hpp"

namespace swelab::oracle {

/// Roots of q^2/(2 g h^2) + h = level found by a uniform scan over h with
/// spacing `step`, refined by linear interpolation inside the bracketing
/// interval. `super` is the root below the critical depth, `sub` above it.
struct ScanRoots {
  std::optional<double> super;
  std::optional<double> sub;
};

inline ScanRoots scan_head_roots(double q, double level, double g, double step = 1e-7) {
  ScanRoots out;
  auto f = [&](double h) { return h + q * q / (2.0 * g * h * h) - level; };
  const double h_max = level + 2.0 * step;
  const auto n = static_cast<std::int64_t>(std::ceil(h_max / step));
  double prev_h = step;
  double prev_f = f(prev_h);
  for (std::int64_t k = 2; k <= n; ++k) {
    const double h = static_cast<double>(k) * step;
    const double fh = f(h);
    if ((prev_f > 0.0) != (fh > 0.0) || fh == 0.0) {
      const double root = prev_h + (h - prev_h) * prev_f / (prev_f - fh);
      if (prev_f > 0.0 && !out.super) {
        out.super = root;
      } else if (prev_f <= 0.0) {
        out.sub = root;
      }
    }
    prev_h = h;
    prev_f = fh;
  }
  return out;
}

/// Midpoint rule for the source integral g h(s) dH/ds along the straight
/// segment between two states.
inline double path_source_midpoint(double h_l, double h_r, double H_l, double H_r, double g,
                                   long n = 1'000'000) {
  long double sum = 0.0L;
  for (long k = 0; k < n; ++k) {
    const long double s = (k + 0.5L) / n;
    sum += static_cast<long double>(g) * (h_l + s * (h_r - h_l));
  }
  return static_cast<double>(sum / n * (H_r - H_l));
}

inline double l1_long_double(std::span<const PhysState> a, std::span<const PhysState> b, double dx) {
  long double sum = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += std::fabs(static_cast<long double>(a[i].h) - static_cast<long double>(b[i].h));
  }
  return static_cast<double>(sum * dx);
}

/// Seeded generator of wet states with |Fr^2 - 1| kept away from zero when
/// `avoid_sonic` is set.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

  PhysState wet(double g = 9.81, bool avoid_sonic = false) {
    for (;;) {
      const double h = uniform(0.01, 2.0);
      const double u = uniform(-3.0, 3.0);
      const double fr2 = u * u / (g * h);
      if (!avoid_sonic || std::abs(fr2 - 1.0) > 0.05) return {h, h * u};
    }
  }

  ExtState ext(double g = 9.81) { return {wet(g), uniform(-1.0, 1.0)}; }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace swelab::oracle
