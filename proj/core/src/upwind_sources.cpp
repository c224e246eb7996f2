#include "swelab/upwind_sources.hpp"

#include <algorithm>
#include <cmath>

namespace swelab {

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

SourceSplit project(const RoeData& roe, double s1, double s2, double dH) {
  const Vec2 S{0.0, roe.c_roe * roe.c_roe * dH};
  // P- = K diag((1 - s_k)/2) K^-1
  const Mat2 diag{0.5 * (1.0 - s1), 0.0, 0.0, 0.5 * (1.0 - s2)};
  const Vec2 minus = roe.K * (diag * (roe.K_inv * S));
  return {minus, S - minus};
}

}  // namespace

double sonic_floor(const RoeData& roe) {
  return 1e-8 * std::max(1.0, std::abs(roe.u_roe) + roe.c_roe);
}

SourceSplit roe_source_split(const ExtState& W_l, const ExtState& W_r, const PhysConstants& c) {
  const RoeData roe = roe_average(W_l.w, W_r.w, c);
  const double dH = W_r.H - W_l.H;
  if (dH == 0.0) return {};
  const double floor = sonic_floor(roe);
  if (std::min(std::abs(roe.lambda.l1), std::abs(roe.lambda.l2)) < floor) {
    throw Error(ErrorCode::SonicInterface, "sonic interface: Roe matrix is singular");
  }
  return project(roe, sgn(roe.lambda.l1), sgn(roe.lambda.l2), dH);
}

SourceSplit roe_source_split_regularized(const ExtState& W_l, const ExtState& W_r,
                                         const PhysConstants& c, bool* sonic) {
  const RoeData roe = roe_average(W_l.w, W_r.w, c);
  const double dH = W_r.H - W_l.H;
  if (sonic) *sonic = false;
  if (dH == 0.0) return {};
  const double floor = sonic_floor(roe);
  auto s = [&](double l) {
    if (std::abs(l) < floor) {
      if (sonic) *sonic = true;
      return 0.0;
    }
    return sgn(l);
  };
  return project(roe, s(roe.lambda.l1), s(roe.lambda.l2), dH);
}

Mat2 regularized_inverse(const RoeData& roe, const SonicRegularization& reg) {
  const double u = roe.u_roe;
  const double a2 = roe.c_roe * roe.c_roe;
  switch (reg.mode) {
    case SonicMode::StarInverse:
      return {0.0, 1.0 / a2, 1.0, 0.0};
    case SonicMode::MuInverse:
    case SonicMode::MuInverseAsPrinted: {
      const double one_minus_fr2 = 1.0 - u * u / a2;
      const double mu = std::max(reg.eps, std::abs(one_minus_fr2)) * (one_minus_fr2 < 0.0 ? -1.0 : 1.0);
      if (reg.mode == SonicMode::MuInverseAsPrinted) {
        return (1.0 / mu) * Mat2{0.0, 1.0, a2, 2.0 * u};
      }
      // J^-1 = 1/(c^2 (1 - Fr^2)) [[-2u, 1], [c^2 - u^2, 0]]
      return (1.0 / (a2 * mu)) * Mat2{-2.0 * u, 1.0, a2 - u * u, 0.0};
    }
  }
  return {};
}

SourceSplit omega_source_split(const ExtState& W_l, const ExtState& W_r, double omega, double dx,
                               double dt, const SonicRegularization& reg, OmegaSourceForm form,
                               const PhysConstants& c) {
  if (!(dx > 0.0) || !(dt > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "omega_source_split: dx and dt must be positive");
  }
  const double dH = W_r.H - W_l.H;
  if (dH == 0.0) return {};
  const RoeData roe = roe_average(W_l.w, W_r.w, c);
  const Vec2 S{0.0, roe.c_roe * roe.c_roe * dH};
  const Vec2 centred = 0.5 * S;
  const Vec2 upwind =
      ((1.0 - omega) * dx / dt) * (regularized_inverse(roe, reg) * S) + (omega * dt / dx) * (roe.J * S);
  const double scale = form == OmegaSourceForm::Halved ? 0.5 : 1.0;
  const Vec2 minus = centred - scale * upwind;
  return {minus, S - minus};
}

Vec2 path_source_trapezoid(const ExtState& W_l, const ExtState& W_r, const PhysConstants& c) {
  return {0.0, c.g * 0.5 * (W_l.w.h + W_r.w.h) * (W_r.H - W_l.H)};
}

}  // namespace swelab
