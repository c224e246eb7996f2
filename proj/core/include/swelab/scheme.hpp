#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "swelab/hydrostatic.hpp"
#include "swelab/upwind_sources.hpp"

namespace swelab {

/// Source-treatment / flux combinations. Subsonic is a reserved slot for the
/// subsonic reconstruction scheme, which this library does not implement.
enum class SchemeId { Roe, ForceHR, ForceWB, GforceHR, GforceWB, HR, ModifiedHR, Subsonic };

struct SchemeInfo {
  SchemeId id;
  std::string_view name;
  std::string_view description;
  bool implemented;
};

/// Every scheme slot, in listing order.
std::span<const SchemeInfo> scheme_catalog();

std::string_view to_string(SchemeId id);
/// Throws InvalidArgument for unknown names.
SchemeId parse_scheme(std::string_view name);
/// The implemented schemes, in listing order.
std::span<const SchemeId> implemented_schemes();

struct SchemeConfig {
  SchemeId scheme = SchemeId::HR;
  double cfl = 0.9;
  SonicRegularization sonic;
  GatePolicy gate = GatePolicy::Dimensional;
  /// Overrides the homogeneous flux of the HR-family schemes.
  std::optional<FluxKind> hr_flux;
  /// Harten smoothing width for Roe eigenvalues; 0 disables it.
  double harten_delta = 0.0;
  /// Scaling of the omega-family source upwinding; unset means the form
  /// that passes the well-balance self-test.
  std::optional<OmegaSourceForm> omega_form;

  /// Throws InvalidArgument when CFL is outside (0, 1] or the scheme is the
  /// unimplemented slot.
  void validate() const;
};

/// The homogeneous flux an HR-family scheme uses, or nullopt for the upwind
/// (Roe / WB) schemes.
std::optional<FluxKind> hr_flux_of(const SchemeConfig& cfg);
bool is_hr_family(SchemeId id);

/// Runs a water-at-rest fixed-point check of the assembled FORCE WB scheme
/// with each candidate scaling of the source upwinding and returns the first
/// that holds to 1e-12. Computed once per process.
OmegaSourceForm resolve_omega_source_form();

std::string_view to_string(OmegaSourceForm form);
std::string_view to_string(SonicMode mode);
std::string_view to_string(GatePolicy policy);
SonicMode parse_sonic_mode(std::string_view name);
GatePolicy parse_gate_policy(std::string_view name);
FluxKind parse_flux_kind(std::string_view name);

/// Flux and source split of one interface for the configured scheme.
InterfaceTerms interface_terms(const ExtState& W_l, const ExtState& W_r, const SchemeConfig& cfg,
                               double dx, double dt, const PhysConstants& c);

}  // namespace swelab
