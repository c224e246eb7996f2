#include "swelab/scheme.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace swelab {

namespace {

constexpr std::array<SchemeInfo, 8> kCatalog{{
    {SchemeId::Roe, "roe", "Roe flux with Roe-matrix upwinding of the source", true},
    {SchemeId::ForceHR, "force-hr", "hydrostatic reconstruction with the FORCE flux", true},
    {SchemeId::ForceWB, "force-wb", "well-balanced FORCE (omega = 1/2) with upwinded source", true},
    {SchemeId::GforceHR, "gforce-hr", "hydrostatic reconstruction with the GFORCE flux", true},
    {SchemeId::GforceWB, "gforce-wb", "well-balanced GFORCE (omega = 1/(1+CFL)) with upwinded source",
     true},
    {SchemeId::HR, "hr", "hydrostatic reconstruction with the Roe flux", true},
    {SchemeId::ModifiedHR, "modified-hr",
     "modified hydrostatic reconstruction (large-step corrections, energy gate) with the Roe flux",
     true},
    {SchemeId::Subsonic, "subsonic", "subsonic reconstruction (not implemented)", false},
}};

constexpr std::array<SchemeId, 7> kImplemented{SchemeId::Roe,      SchemeId::ForceHR,
                                               SchemeId::ForceWB,  SchemeId::GforceHR,
                                               SchemeId::GforceWB, SchemeId::HR,
                                               SchemeId::ModifiedHR};

InterfaceTerms upwind_terms(const ExtState& W_l, const ExtState& W_r, const SchemeConfig& cfg,
                            double dx, double dt, const PhysConstants& c) {
  InterfaceTerms out;
  if (!is_wet(W_l.w, c) && !is_wet(W_r.w, c)) {
    out.flux = 0.5 * (physical_flux(W_l.w, c) + physical_flux(W_r.w, c));
    return out;
  }
  if (cfg.scheme == SchemeId::Roe) {
    out.flux = roe_flux(W_l.w, W_r.w, c, cfg.harten_delta);
    out.source = roe_source_split_regularized(W_l, W_r, c, &out.sonic);
    return out;
  }
  const double omega = omega_for(cfg.scheme == SchemeId::ForceWB ? FluxKind::Force : FluxKind::Gforce,
                                 cfg.cfl);
  const OmegaSourceForm form = cfg.omega_form ? *cfg.omega_form : resolve_omega_source_form();
  out.flux = omega_flux(W_l.w, W_r.w, omega, dx, dt, c);
  out.source = omega_source_split(W_l, W_r, omega, dx, dt, cfg.sonic, form, c);
  return out;
}

double rest_residual(OmegaSourceForm form) {
  const PhysConstants c;
  const std::vector<double> H{0.0, 0.3, -0.2, 0.5, 0.1, 0.45, -0.1, 0.2};
  const double level = 1.0;
  std::vector<ExtState> cells;
  for (double b : H) cells.push_back({{level + b, 0.0}, b});

  SchemeConfig cfg;
  cfg.scheme = SchemeId::ForceWB;
  cfg.omega_form = form;
  const double dx = 0.1;
  const double dt = 0.9 * dx / std::sqrt(c.g * (level + 0.5));

  std::vector<InterfaceTerms> terms;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    terms.push_back(interface_terms(cells[i], cells[i + 1], cfg, dx, dt, c));
  }
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < cells.size(); ++i) {
    const InterfaceTerms& left = terms[i - 1];
    const InterfaceTerms& right = terms[i];
    const Vec2 dw = (dt / dx) * ((left.flux - right.flux) + left.source.plus + right.source.minus);
    worst = std::max(worst, std::abs(dw.x0) + std::abs(dw.x1));
  }
  return worst;
}

}  // namespace

std::span<const SchemeInfo> scheme_catalog() { return kCatalog; }

std::span<const SchemeId> implemented_schemes() { return kImplemented; }

std::string_view to_string(SchemeId id) {
  for (const auto& info : kCatalog) {
    if (info.id == id) return info.name;
  }
  return "?";
}

SchemeId parse_scheme(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown scheme '" + std::string(name) + "'");
}

bool is_hr_family(SchemeId id) {
  return id == SchemeId::HR || id == SchemeId::ModifiedHR || id == SchemeId::ForceHR ||
         id == SchemeId::GforceHR;
}

std::optional<FluxKind> hr_flux_of(const SchemeConfig& cfg) {
  if (!is_hr_family(cfg.scheme)) return std::nullopt;
  if (cfg.hr_flux) return cfg.hr_flux;
  switch (cfg.scheme) {
    case SchemeId::ForceHR:
      return FluxKind::Force;
    case SchemeId::GforceHR:
      return FluxKind::Gforce;
    default:
      return FluxKind::Roe;
  }
}

void SchemeConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "CFL must lie in (0, 1], got " + std::to_string(cfl));
  }
  if (scheme == SchemeId::Subsonic) {
    throw Error(ErrorCode::NotImplemented,
                "scheme 'subsonic' (subsonic reconstruction) is not implemented");
  }
  if (sonic.mode != SonicMode::StarInverse && !(sonic.eps > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  }
}

OmegaSourceForm resolve_omega_source_form() {
  static const OmegaSourceForm resolved = [] {
    for (OmegaSourceForm form : {OmegaSourceForm::AsPrinted, OmegaSourceForm::Halved}) {
      if (rest_residual(form) <= 1e-12) return form;
    }
    throw Error(ErrorCode::InvalidArgument,
                "no omega-family source form preserves water at rest");
  }();
  return resolved;
}

std::string_view to_string(OmegaSourceForm form) {
  return form == OmegaSourceForm::AsPrinted ? "as-printed" : "halved";
}

std::string_view to_string(SonicMode mode) {
  switch (mode) {
    case SonicMode::MuInverse:
      return "mu";
    case SonicMode::MuInverseAsPrinted:
      return "mu-as-printed";
    case SonicMode::StarInverse:
      return "star";
  }
  return "?";
}

std::string_view to_string(GatePolicy policy) {
  return policy == GatePolicy::Dimensional ? "dimensional" : "as-printed";
}

SonicMode parse_sonic_mode(std::string_view name) {
  for (SonicMode m : {SonicMode::MuInverse, SonicMode::MuInverseAsPrinted, SonicMode::StarInverse}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown sonic regularization '" + std::string(name) + "'");
}

GatePolicy parse_gate_policy(std::string_view name) {
  for (GatePolicy p : {GatePolicy::Dimensional, GatePolicy::AsPrinted}) {
    if (to_string(p) == name) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown gate policy '" + std::string(name) + "'");
}

FluxKind parse_flux_kind(std::string_view name) {
  for (FluxKind k : {FluxKind::Roe, FluxKind::Force, FluxKind::Gforce, FluxKind::LaxFriedrichs,
                     FluxKind::LaxWendroff}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown flux '" + std::string(name) + "'");
}

InterfaceTerms interface_terms(const ExtState& W_l, const ExtState& W_r, const SchemeConfig& cfg,
                               double dx, double dt, const PhysConstants& c) {
  if (const auto kind = hr_flux_of(cfg)) {
    const HomogeneousFlux flux{*kind, cfg.cfl, dx, dt, cfg.harten_delta};
    const HRVariant variant =
        cfg.scheme == SchemeId::ModifiedHR ? HRVariant::Modified : HRVariant::Original;
    return hr_interface_terms(W_l, W_r, flux, variant, cfg.gate, c);
  }
  if (cfg.scheme == SchemeId::Subsonic) {
    throw Error(ErrorCode::NotImplemented,
                "scheme 'subsonic' (subsonic reconstruction) is not implemented");
  }
  return upwind_terms(W_l, W_r, cfg, dx, dt, c);
}

}  // namespace swelab
