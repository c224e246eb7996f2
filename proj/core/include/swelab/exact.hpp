#pragma once

#include <functional>
#include <span>
#include <vector>

#include "swelab/state.hpp"

namespace swelab {

/// Which monotone branch of phi(h) = h + q^2/(2 g h^2) a stationary
/// solution lives on.
enum class FlowBranch { Subcritical, Supercritical };

/// Branch of a wet state. Throws NearCritical when |Fr^2 - 1| < 1e-6.
FlowBranch flow_branch(const PhysState& w, const PhysConstants& c);

/// Solves h + q^2/(2 g h^2) = level on the requested branch by bracketed
/// bisection, split at the critical depth (q^2/g)^(1/3). For q == 0 the
/// solution is h = level. Throws NoAdmissibleRoot when level lies below the
/// critical minimum.
double solve_invariant_depth(double q, double level, FlowBranch branch, const PhysConstants& c);

/// State across a stationary bottom discontinuity: the depth on the far side
/// of a step to bottom depth H_r that preserves both invariants of W_l.
PhysState exact_step_state(const ExtState& W_l, double H_r, const PhysConstants& c);

/// Smooth stationary profile with the inlet's invariants, evaluated at xs.
/// Throws TranscriticalProfile if any position has no root on the inlet
/// branch.
std::vector<PhysState> exact_smooth_profile(const std::function<double(double)>& bathymetry,
                                            const ExtState& inlet, std::span<const double> xs,
                                            const PhysConstants& c);

}  // namespace swelab
