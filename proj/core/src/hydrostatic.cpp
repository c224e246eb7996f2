#include "swelab/hydrostatic.hpp"

#include <algorithm>
#include <cmath>

namespace swelab {

HRInterface hr_reconstruct(const ExtState& W_l, const ExtState& W_r, const PhysConstants& c) {
  HRInterface f;
  f.H_star = std::min(W_l.H, W_r.H);
  // h - (H - H*) rather than h - H + H*: exact when H* == H.
  const double raw_l = W_l.w.h - (W_l.H - f.H_star);
  const double raw_r = W_r.w.h - (W_r.H - f.H_star);
  f.large_step = raw_l < 0.0 || raw_r < 0.0;

  const double h_m = std::max(0.0, raw_l);
  const double h_p = std::max(0.0, raw_r);
  f.w_minus = {h_m, h_m * velocity(W_l.w, c)};
  f.w_plus = {h_p, h_p * velocity(W_r.w, c)};
  f.S_minus = {0.0, pressure(W_l.w.h, c) - pressure(h_m, c)};
  f.S_plus = {0.0, pressure(W_r.w.h, c) - pressure(h_p, c)};
  return f;
}

SourceSplit hr_source(const ExtState& W_l, const ExtState& W_r, const HRInterface& iface,
                      const PhysConstants& c) {
  return {{0.0, pressure(W_l.w.h, c) - pressure(iface.w_minus.h, c)},
          {0.0, pressure(W_r.w.h, c) - pressure(iface.w_plus.h, c)}};
}

bool emerging_right(const ExtState& W_l, const ExtState& W_r, const PhysConstants& c) {
  return !is_wet(W_r.w, c) && W_l.w.h - W_l.H + W_r.H < 0.0;
}

bool emerging_left(const ExtState& W_l, const ExtState& W_r, const PhysConstants& c) {
  return !is_wet(W_l.w, c) && W_r.w.h - W_r.H + W_l.H < 0.0;
}

namespace {

bool climbs(const ExtState& wet, double H_other, GatePolicy policy, const PhysConstants& c) {
  const double h = wet.w.h;
  const double u = velocity(wet.w, c);
  const double lhs = 0.5 * u * u + c.g * (h - wet.H + H_other);
  const double ghu = std::abs(c.g * h * u);
  const double rhs = policy == GatePolicy::Dimensional ? 1.5 * std::cbrt(ghu * ghu)
                                                       : 1.5 * std::sqrt(ghu * ghu * ghu);
  return lhs > rhs;
}

}  // namespace

bool energy_gate(const ExtState& W_l, const ExtState& W_r, GatePolicy policy,
                 const PhysConstants& c) {
  if (emerging_right(W_l, W_r, c)) {
    return velocity(W_l.w, c) > 0.0 && climbs(W_l, W_r.H, policy, c);
  }
  if (emerging_left(W_l, W_r, c)) {
    return velocity(W_r.w, c) < 0.0 && climbs(W_r, W_l.H, policy, c);
  }
  return false;
}

HRCorrections modified_hr_corrections(const ExtState& W_l, const ExtState& W_r,
                                      const HRInterface& iface, GatePolicy gate,
                                      const PhysConstants& c) {
  HRCorrections t;
  if (!iface.large_step) return t;
  if (emerging_right(W_l, W_r, c) || emerging_left(W_l, W_r, c)) {
    t.gate_passed = energy_gate(W_l, W_r, gate, c);
    if (!t.gate_passed) return t;
  }
  const double h_l = W_l.w.h;
  const double h_r = W_r.w.h;
  const double h_m = iface.w_minus.h;
  const double h_p = iface.w_plus.h;
  t.T_minus = pressure(h_m, c) - pressure(h_l, c) - c.g * 0.5 * (h_l + h_m) * (iface.H_star - W_l.H);
  t.T_plus = pressure(h_p, c) - pressure(h_r, c) + c.g * 0.5 * (h_r + h_p) * (W_r.H - iface.H_star);
  return t;
}

Vec2 homogeneous_flux(const PhysState& w_l, const PhysState& w_r, const HomogeneousFlux& flux,
                      const PhysConstants& c) {
  if (!is_wet(w_l, c) && !is_wet(w_r, c)) {
    const Vec2 dw = w_r.vec() - w_l.vec();
    if (flux.kind == FluxKind::Roe || dw == Vec2{}) {
      return 0.5 * (physical_flux(w_l, c) + physical_flux(w_r, c));
    }
    const double omega = omega_for(flux.kind, flux.cfl);
    return 0.5 * (physical_flux(w_l, c) + physical_flux(w_r, c)) -
           (0.5 * (1.0 - omega) * flux.dx / flux.dt) * dw;
  }
  if (flux.kind == FluxKind::Roe) return roe_flux(w_l, w_r, c, flux.harten_delta);
  return omega_flux(w_l, w_r, omega_for(flux.kind, flux.cfl), flux.dx, flux.dt, c);
}

InterfaceTerms hr_interface_terms(const ExtState& W_l, const ExtState& W_r,
                                  const HomogeneousFlux& flux, HRVariant variant, GatePolicy gate,
                                  const PhysConstants& c) {
  HRInterface iface = hr_reconstruct(W_l, W_r, c);
  InterfaceTerms out;
  out.flux = homogeneous_flux(iface.w_minus, iface.w_plus, flux, c);
  out.large_step = iface.large_step;

  double corr_minus = iface.S_minus.x1;
  double corr_plus = iface.S_plus.x1;
  if (variant == HRVariant::Modified && iface.large_step) {
    const HRCorrections t = modified_hr_corrections(W_l, W_r, iface, gate, c);
    out.gate_applied = emerging_right(W_l, W_r, c) || emerging_left(W_l, W_r, c);
    out.gate_passed = t.gate_passed;
    corr_minus += t.T_minus;
    corr_plus += t.T_plus;
  }
  // Flux form -> update form: the left correction leaves the left cell.
  out.source = {{0.0, -corr_minus}, {0.0, corr_plus}};
  return out;
}

}  // namespace swelab
