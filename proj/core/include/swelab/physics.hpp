#pragma once

#include "swelab/state.hpp"

namespace swelab {

struct EigenPair {
  double l1 = 0.0;  // u - c
  double l2 = 0.0;  // u + c
};

/// Entropy density and entropy flux of the balance law, including the
/// bottom terms -g h H and -g h u H.
struct EntropyValues {
  double eta = 0.0;
  double G = 0.0;
};

/// F(w) = (q, q^2/h + g h^2/2). Dry states contribute no momentum flux.
Vec2 physical_flux(const PhysState& w, const PhysConstants& c);

/// Nonzero eigenvalues u -/+ sqrt(g h); (0, 0) on a dry state.
EigenPair eigenvalues(const PhysState& w, const PhysConstants& c);

/// u^2 / (g h). Throws DryInput on dry cells.
double froude_squared(const PhysState& w, const PhysConstants& c);

/// Invariants of the stationary contact: (q, h + q^2/(2 g h^2) - H).
Vec2 riemann_invariant(const ExtState& W, const PhysConstants& c);

EntropyValues entropy_pair(const ExtState& W, const PhysConstants& c);

/// Jacobian dF/dw of the homogeneous flux at a wet state.
Mat2 flux_jacobian(const PhysState& w, const PhysConstants& c);

}  // namespace swelab
