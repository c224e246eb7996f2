#pragma once

#include <string_view>

#include "swelab/physics.hpp"
#include "swelab/state.hpp"

namespace swelab {

/// Roe linearization of the homogeneous system at one interface, with its
/// closed-form eigen-decomposition J = K diag(lambda) K^-1.
struct RoeData {
  double u_roe = 0.0;
  double c_roe = 0.0;
  Mat2 J;
  Mat2 absJ;
  Mat2 K;
  Mat2 K_inv;
  EigenPair lambda;
};

/// Homogeneous flux choice. The omega family blends Lax-Friedrichs (omega = 0)
/// and Lax-Wendroff (omega = 1) viscosities.
enum class FluxKind { Roe, Force, Gforce, LaxFriedrichs, LaxWendroff };

/// omega of a centred flux; FORCE is 1/2, GFORCE is 1/(1 + CFL). Roe has no omega.
double omega_for(FluxKind kind, double cfl);

std::string_view to_string(FluxKind kind);

/// Depth-square-root weighted average velocity, c_roe = sqrt(g (h_l + h_r)/2).
/// Throws DryInterface if both sides are dry.
RoeData roe_average(const PhysState& w_l, const PhysState& w_r, const PhysConstants& c);

/// Plain Roe flux. harten_delta > 0 switches on Harten's eigenvalue
/// smoothing for |lambda| < harten_delta; the default keeps it off.
Vec2 roe_flux(const PhysState& w_l, const PhysState& w_r, const PhysConstants& c,
              double harten_delta = 0.0);

/// 1/2 (F_l + F_r) - 1/2 [(1 - omega) dx/dt Id + omega dt/dx J^2] (w_r - w_l).
Vec2 omega_flux(const PhysState& w_l, const PhysState& w_r, double omega, double dx, double dt,
                const PhysConstants& c);

}  // namespace swelab
