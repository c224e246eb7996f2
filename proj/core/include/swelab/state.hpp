#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace swelab {

/// Failure categories raised by the library. Every error is a swelab::Error.
enum class ErrorCode {
  NegativeDepth,
  DryInput,
  DryInterface,
  SonicInterface,
  NoAdmissibleRoot,
  NearCritical,
  TranscriticalProfile,
  AllDry,
  NonFinite,
  LengthMismatch,
  InvalidArgument,
  StepLimit,
  NotImplemented,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Two-component real vector (conserved variables, fluxes, source terms).
struct Vec2 {
  double x0 = 0.0;
  double x1 = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x0 + b.x0, a.x1 + b.x1}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x0 - b.x0, a.x1 - b.x1}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x0, -a.x1}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x0, s * a.x1}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

/// Row-major 2x2 matrix.
struct Mat2 {
  double a00 = 0.0, a01 = 0.0;
  double a10 = 0.0, a11 = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  friend constexpr Vec2 operator*(const Mat2& m, Vec2 v) {
    return {m.a00 * v.x0 + m.a01 * v.x1, m.a10 * v.x0 + m.a11 * v.x1};
  }
  friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a00 * b.a00 + a.a01 * b.a10, a.a00 * b.a01 + a.a01 * b.a11,
            a.a10 * b.a00 + a.a11 * b.a10, a.a10 * b.a01 + a.a11 * b.a11};
  }
  friend constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a00 + b.a00, a.a01 + b.a01, a.a10 + b.a10, a.a11 + b.a11};
  }
  friend constexpr Mat2 operator*(double s, const Mat2& a) {
    return {s * a.a00, s * a.a01, s * a.a10, s * a.a11};
  }
};

/// Gravity and the depth below which a cell counts as dry.
struct PhysConstants {
  double g = 9.81;
  double h_dry = 1e-8;
};

/// Conserved pair on one cell: water thickness h [m] and discharge q [m^2/s].
struct PhysState {
  double h = 0.0;
  double q = 0.0;

  Vec2 vec() const { return {h, q}; }
  friend constexpr bool operator==(const PhysState&, const PhysState&) = default;
};

/// Physical state plus the local bottom depth H, measured downward from the
/// reference level. Free-surface elevation is h - H.
struct ExtState {
  PhysState w;
  double H = 0.0;

  double eta() const { return w.h - H; }
};

inline bool is_wet(const PhysState& w, const PhysConstants& c) { return w.h > c.h_dry; }

/// Depth-averaged velocity; zero on dry cells.
inline double velocity(const PhysState& w, const PhysConstants& c) {
  return is_wet(w, c) ? w.q / w.h : 0.0;
}

/// Hydrostatic pressure p(h) = g h^2 / 2.
inline double pressure(double h, const PhysConstants& c) { return 0.5 * c.g * h * h; }

}  // namespace swelab
