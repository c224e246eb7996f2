#include "swelab/physics.hpp"

#include <string>

namespace swelab {

namespace {

void require_nonnegative(const PhysState& w) {
  if (!(w.h >= 0.0)) {
    throw Error(ErrorCode::NegativeDepth, "negative water thickness h = " + std::to_string(w.h));
  }
}

void require_wet(const PhysState& w, const PhysConstants& c, const char* op) {
  require_nonnegative(w);
  if (!is_wet(w, c)) {
    throw Error(ErrorCode::DryInput, std::string(op) + ": dry input state");
  }
}

}  // namespace

Vec2 physical_flux(const PhysState& w, const PhysConstants& c) {
  require_nonnegative(w);
  const double u = velocity(w, c);
  return {w.q, w.q * u + pressure(w.h, c)};
}

EigenPair eigenvalues(const PhysState& w, const PhysConstants& c) {
  require_nonnegative(w);
  if (!is_wet(w, c)) return {};
  const double u = w.q / w.h;
  const double cel = std::sqrt(c.g * w.h);
  return {u - cel, u + cel};
}

double froude_squared(const PhysState& w, const PhysConstants& c) {
  require_wet(w, c, "froude_squared");
  const double u = w.q / w.h;
  return u * u / (c.g * w.h);
}

Vec2 riemann_invariant(const ExtState& W, const PhysConstants& c) {
  require_wet(W.w, c, "riemann_invariant");
  const double h = W.w.h;
  const double q = W.w.q;
  return {q, h + q * q / (2.0 * c.g * h * h) - W.H};
}

EntropyValues entropy_pair(const ExtState& W, const PhysConstants& c) {
  require_nonnegative(W.w);
  const double h = W.w.h;
  const double u = velocity(W.w, c);
  const double eta = 0.5 * h * u * u + pressure(h, c) - c.g * h * W.H;
  const double G = (0.5 * u * u + c.g * h) * h * u - c.g * h * u * W.H;
  return {eta, G};
}

Mat2 flux_jacobian(const PhysState& w, const PhysConstants& c) {
  require_wet(w, c, "flux_jacobian");
  const double u = w.q / w.h;
  return {0.0, 1.0, c.g * w.h - u * u, 2.0 * u};
}

}  // namespace swelab
