#pragma once

#include "swelab/fluxes.hpp"
#include "swelab/state.hpp"
#include "swelab/upwind_sources.hpp"

namespace swelab {

/// Reconstructed interface of the hydrostatic reconstruction (HR).
///
/// `S_minus` / `S_plus` are the pressure corrections p(h_l) - p(h-) and
/// p(h_r) - p(h+) in flux form: the left cell sees F + S_minus leaving it and
/// the right cell sees F + S_plus entering it. `hr_interface_terms` converts
/// them to the SourceSplit sign convention of the assembled update.
struct HRInterface {
  double H_star = 0.0;
  PhysState w_minus;
  PhysState w_plus;
  Vec2 S_minus;
  Vec2 S_plus;
  /// One side's free surface lies below the other side's bottom.
  bool large_step = false;
  /// The emerging-bottom energy gate was evaluated at this interface.
  bool gate_applied = false;
};

/// Large-step corrections added to S_minus / S_plus (flux form).
struct HRCorrections {
  double T_minus = 0.0;
  double T_plus = 0.0;
  bool gate_passed = false;
};

enum class HRVariant { Original, Modified };

/// Right-hand side of the emerging-bottom energy test.
enum class GatePolicy {
  /// (3/2) ((g h u)^2)^(1/3): g times the critical specific energy.
  Dimensional,
  /// (3/2) sqrt(|g h u|^3), dimensionally inconsistent, kept selectable.
  AsPrinted,
};

/// Interface terms of any scheme in the update
///   w_i -= dt/dx (F_{i+1/2} - F_{i-1/2});  w_i += dt/dx (S+_{i-1/2} + S-_{i+1/2}).
struct InterfaceTerms {
  Vec2 flux;
  SourceSplit source;
  bool large_step = false;
  bool gate_applied = false;
  bool gate_passed = false;
  bool sonic = false;
};

/// Parameters the homogeneous flux may need inside an HR interface.
struct HomogeneousFlux {
  FluxKind kind = FluxKind::Roe;
  double cfl = 0.9;
  double dx = 0.0;
  double dt = 0.0;
  double harten_delta = 0.0;
};

/// H* = min(H_l, H_r); h-+ = (h - H + H*)_+; reconstructed velocities are
/// the donor-cell velocities.
HRInterface hr_reconstruct(const ExtState& W_l, const ExtState& W_r, const PhysConstants& c);

/// Pressure corrections (0, p(h_l) - p(h-)), (0, p(h_r) - p(h+)), flux form.
SourceSplit hr_source(const ExtState& W_l, const ExtState& W_r, const HRInterface& iface,
                      const PhysConstants& c);

/// True iff the right cell is dry and its bottom rises above the left free
/// surface. `emerging_left` is the mirror image.
bool emerging_right(const ExtState& W_l, const ExtState& W_r, const PhysConstants& c);
bool emerging_left(const ExtState& W_l, const ExtState& W_r, const PhysConstants& c);

/// Whether the wet side of an emerging-bottom interface carries enough
/// mechanical energy to climb the step.
bool energy_gate(const ExtState& W_l, const ExtState& W_r, GatePolicy policy,
                 const PhysConstants& c);

/// T+- of the modified reconstruction. Zero outside large steps, and zero at
/// emerging-bottom interfaces whose energy gate fails. Otherwise the
/// corrected pressure terms integrate g h dH along straight segments through
/// the full step height:
///   S-_eff = g (h_l + h-)/2 (H* - H_l),  S+_eff = g (h_r + h+)/2 (H_r - H*).
HRCorrections modified_hr_corrections(const ExtState& W_l, const ExtState& W_r,
                                      const HRInterface& iface, GatePolicy gate,
                                      const PhysConstants& c);

/// Homogeneous flux evaluated between two possibly-dry states. Both sides
/// dry yields zero flux.
Vec2 homogeneous_flux(const PhysState& w_l, const PhysState& w_r, const HomogeneousFlux& flux,
                      const PhysConstants& c);

/// Full HR or modified-HR interface: flux at the reconstructed pair plus the
/// (corrected) pressure terms, in assembled-update sign convention.
InterfaceTerms hr_interface_terms(const ExtState& W_l, const ExtState& W_r,
                                  const HomogeneousFlux& flux, HRVariant variant, GatePolicy gate,
                                  const PhysConstants& c);

}  // namespace swelab
