#include "swelab/fluxes.hpp"

#include <cmath>

namespace swelab {

double omega_for(FluxKind kind, double cfl) {
  switch (kind) {
    case FluxKind::Force:
      return 0.5;
    case FluxKind::Gforce:
      return 1.0 / (1.0 + cfl);
    case FluxKind::LaxFriedrichs:
      return 0.0;
    case FluxKind::LaxWendroff:
      return 1.0;
    case FluxKind::Roe:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "Roe flux has no omega parameter");
}

std::string_view to_string(FluxKind kind) {
  switch (kind) {
    case FluxKind::Roe:
      return "roe";
    case FluxKind::Force:
      return "force";
    case FluxKind::Gforce:
      return "gforce";
    case FluxKind::LaxFriedrichs:
      return "lf";
    case FluxKind::LaxWendroff:
      return "lw";
  }
  return "?";
}

RoeData roe_average(const PhysState& w_l, const PhysState& w_r, const PhysConstants& c) {
  if (w_l.h < 0.0 || w_r.h < 0.0) {
    throw Error(ErrorCode::NegativeDepth, "roe_average: negative water thickness");
  }
  if (!is_wet(w_l, c) && !is_wet(w_r, c)) {
    throw Error(ErrorCode::DryInterface, "dry interface");
  }
  RoeData r;
  const double sl = std::sqrt(w_l.h);
  const double sr = std::sqrt(w_r.h);
  r.u_roe = (sl * velocity(w_l, c) + sr * velocity(w_r, c)) / (sl + sr);
  r.c_roe = std::sqrt(0.5 * c.g * (w_l.h + w_r.h));

  const double u = r.u_roe;
  const double a = r.c_roe;
  r.lambda = {u - a, u + a};
  r.J = {0.0, 1.0, a * a - u * u, 2.0 * u};

  // Eigenvectors (1, lambda_k) as columns.
  const double l1 = r.lambda.l1;
  const double l2 = r.lambda.l2;
  r.K = {1.0, 1.0, l1, l2};
  const double inv_det = 1.0 / (l2 - l1);
  r.K_inv = {l2 * inv_det, -inv_det, -l1 * inv_det, inv_det};

  const double m1 = std::abs(l1);
  const double m2 = std::abs(l2);
  // K diag(m1, m2) K^-1 expanded.
  r.absJ = {(m1 * l2 - m2 * l1) * inv_det, (m2 - m1) * inv_det,
            l1 * l2 * (m1 - m2) * inv_det, (m2 * l2 - m1 * l1) * inv_det};
  return r;
}

Vec2 roe_flux(const PhysState& w_l, const PhysState& w_r, const PhysConstants& c,
              double harten_delta) {
  const RoeData r = roe_average(w_l, w_r, c);
  const Vec2 centred = 0.5 * (physical_flux(w_l, c) + physical_flux(w_r, c));
  const Vec2 dw = w_r.vec() - w_l.vec();
  if (harten_delta <= 0.0) {
    return centred - 0.5 * (r.absJ * dw);
  }

  auto smooth = [harten_delta](double l) {
    const double m = std::abs(l);
    return m >= harten_delta ? m : 0.5 * (l * l + harten_delta * harten_delta) / harten_delta;
  };
  const double m1 = smooth(r.lambda.l1);
  const double m2 = smooth(r.lambda.l2);
  const Vec2 alpha = r.K_inv * dw;
  const Vec2 visc = r.K * Vec2{m1 * alpha.x0, m2 * alpha.x1};
  return centred - 0.5 * visc;
}

Vec2 omega_flux(const PhysState& w_l, const PhysState& w_r, double omega, double dx, double dt,
                const PhysConstants& c) {
  if (!(dx > 0.0) || !(dt > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "omega_flux: dx and dt must be positive");
  }
  const Vec2 centred = 0.5 * (physical_flux(w_l, c) + physical_flux(w_r, c));
  const Vec2 dw = w_r.vec() - w_l.vec();
  Vec2 visc = ((1.0 - omega) * dx / dt) * dw;
  if (omega != 0.0) {
    const RoeData r = roe_average(w_l, w_r, c);
    visc = visc + (omega * dt / dx) * (r.J * (r.J * dw));
  } else if (!is_wet(w_l, c) && !is_wet(w_r, c)) {
    throw Error(ErrorCode::DryInterface, "dry interface");
  }
  return centred - 0.5 * visc;
}

}  // namespace swelab
