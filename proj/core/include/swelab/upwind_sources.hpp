#pragma once

#include "swelab/fluxes.hpp"
#include "swelab/state.hpp"

namespace swelab {

/// Source contributions of one interface in the update
///   w_i += dt/dx (S+_{i-1/2} + S-_{i+1/2}),
/// i.e. `minus` goes to the interface's left cell and `plus` to its right
/// cell. Only the sum of an upwind split is a pure momentum source; the
/// individual parts of Roe and omega-family splits carry mass components.
struct SourceSplit {
  Vec2 minus;
  Vec2 plus;
};

/// Replacement for J^-1 in the omega-family source upwinding, which is
/// singular at sonic interfaces.
enum class SonicMode {
  /// J^-1 with 1 - Fr^2 replaced by mu = max(eps, |1 - Fr^2|) sgn(1 - Fr^2).
  MuInverse,
  /// The literal matrix (1/mu) [[0, 1], [c^2, 2u]]. Not well-balanced; kept
  /// for comparison.
  MuInverseAsPrinted,
  /// (J*)^-1 with J* = [[0, 1], [c^2, 0]].
  StarInverse,
};

struct SonicRegularization {
  SonicMode mode = SonicMode::MuInverse;
  /// Floor on |1 - Fr^2|. Much smaller values let transient bores crossing
  /// Fr = 1 at a bottom step blow the update up.
  double eps = 0.1;
};

/// Scaling of the +/- upwinding term relative to the centred half.
/// Resolved once by `resolve_omega_source_form` (see scheme.hpp).
enum class OmegaSourceForm { AsPrinted, Halved };

/// Sonic detection threshold 1e-8 * max(1, |u_roe| + c_roe).
double sonic_floor(const RoeData& roe);

/// S+- = P+- (0, c_roe^2) (H_r - H_l) with P+- = 1/2 (Id +- |J| J^-1)
/// built in the eigenbasis. Throws SonicInterface when min |lambda| is below
/// sonic_floor.
SourceSplit roe_source_split(const ExtState& W_l, const ExtState& W_r, const PhysConstants& c);

/// As roe_source_split but never throws at sonic interfaces: a vanishing
/// eigenvalue contributes sgn(0) = 0, so its component is split evenly.
/// Returns true in `sonic` when that happened.
SourceSplit roe_source_split_regularized(const ExtState& W_l, const ExtState& W_r,
                                         const PhysConstants& c, bool* sonic = nullptr);

/// Centred half of S dH on each side, -/+ the upwinding
/// ((1 - omega) dx/dt J~^-1 + omega dt/dx J) S dH.
SourceSplit omega_source_split(const ExtState& W_l, const ExtState& W_r, double omega, double dx,
                               double dt, const SonicRegularization& reg, OmegaSourceForm form,
                               const PhysConstants& c);

/// Exact integral of g h dH along the straight segment joining W_l and W_r:
/// (0, g (h_l + h_r)/2 (H_r - H_l)).
Vec2 path_source_trapezoid(const ExtState& W_l, const ExtState& W_r, const PhysConstants& c);

/// J~^-1 for the chosen regularization, evaluated at the Roe state.
Mat2 regularized_inverse(const RoeData& roe, const SonicRegularization& reg);

}  // namespace swelab
