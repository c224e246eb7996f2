#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "swelab/physics.hpp"

namespace swelab {
namespace {

const PhysConstants kC{};

TEST(PhysicalFlux, RestAndMoving) {
  const Vec2 rest = physical_flux({1.0, 0.0}, kC);
  EXPECT_DOUBLE_EQ(rest.x0, 0.0);
  EXPECT_DOUBLE_EQ(rest.x1, 0.5 * 9.81);
  const Vec2 f = physical_flux({0.5, 1.2}, kC);
  EXPECT_DOUBLE_EQ(f.x0, 1.2);
  EXPECT_DOUBLE_EQ(f.x1, 1.44 / 0.5 + 0.5 * 9.81 * 0.25);
}

TEST(PhysicalFlux, DryStateCarriesNothing) {
  const Vec2 f = physical_flux({0.0, 0.0}, kC);
  EXPECT_EQ(f.x0, 0.0);
  EXPECT_EQ(f.x1, 0.0);
}

TEST(Eigenvalues, Test3LeftState) {
  const EigenPair l = eigenvalues({0.1, 0.15}, kC);
  EXPECT_NEAR(l.l1, 1.5 - std::sqrt(0.981), 1e-14);
  EXPECT_NEAR(l.l2, 1.5 + std::sqrt(0.981), 1e-14);
}

TEST(Eigenvalues, DryIsZero) {
  const EigenPair l = eigenvalues({0.0, 0.0}, kC);
  EXPECT_EQ(l.l1, 0.0);
  EXPECT_EQ(l.l2, 0.0);
}

TEST(FroudeSquared, Examples) {
  EXPECT_EQ(froude_squared({1.0, 0.0}, kC), 0.0);
  const double h = 0.7;
  EXPECT_NEAR(froude_squared({h, h * std::sqrt(9.81 * h)}, kC), 1.0, 1e-14);
  EXPECT_NEAR(froude_squared({0.1, 0.15}, kC), 1.5 * 1.5 / 0.981, 1e-13);
}

TEST(FroudeSquared, DryRejected) {
  try {
    froude_squared({0.0, 0.0}, kC);
    FAIL() << "expected DryInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DryInput);
  }
}

TEST(RiemannInvariant, Examples) {
  const Vec2 rest = riemann_invariant({{1.0, 0.0}, 0.3}, kC);
  EXPECT_EQ(rest.x0, 0.0);
  EXPECT_NEAR(rest.x1, 0.7, 1e-15);

  const Vec2 inlet = riemann_invariant({{0.5, 1.2}, 0.1}, kC);
  EXPECT_EQ(inlet.x0, 1.2);
  EXPECT_NEAR(inlet.x1, 0.5 + 1.44 / (2 * 9.81 * 0.25) - 0.1, 1e-14);
}

TEST(RiemannInvariant, LinearInDepth) {
  const ExtState W{{0.4, 0.3}, 0.2};
  const ExtState deeper{W.w, 0.4};
  EXPECT_NEAR(riemann_invariant(W, kC).x1 - riemann_invariant(deeper, kC).x1, 0.2, 1e-15);
}

TEST(RiemannInvariant, DryRejected) {
  EXPECT_THROW(riemann_invariant({{0.0, 0.0}, 0.0}, kC), Error);
}

TEST(EntropyPair, Examples) {
  const EntropyValues flat = entropy_pair({{1.0, 0.0}, 0.0}, kC);
  EXPECT_DOUBLE_EQ(flat.eta, 9.81 / 2);
  EXPECT_EQ(flat.G, 0.0);
  const EntropyValues deep = entropy_pair({{1.0, 0.0}, 1.0}, kC);
  EXPECT_DOUBLE_EQ(deep.eta, 9.81 / 2 - 9.81);
  const EntropyValues dry = entropy_pair({{0.0, 0.0}, 3.0}, kC);
  EXPECT_EQ(dry.eta, 0.0);
  EXPECT_EQ(dry.G, 0.0);
}

TEST(EntropyPair, BottomTermIsLinear) {
  oracle::StateSampler rng(5);
  for (int k = 0; k < 200; ++k) {
    const PhysState w = rng.wet();
    const double H = rng.uniform(-1.0, 1.0);
    const EntropyValues flat = entropy_pair({w, 0.0}, kC);
    const EntropyValues with = entropy_pair({w, H}, kC);
    EXPECT_NEAR(with.eta, flat.eta - kC.g * w.h * H, 1e-12 * (1 + std::abs(flat.eta)));
    EXPECT_NEAR(with.G, flat.G - kC.g * w.q * H, 1e-12 * (1 + std::abs(flat.G)));
    if (w.q == 0.0) EXPECT_EQ(with.G, 0.0);
  }
}

// Property: Jacobian eigenvalues match eigenvalues(), ordered, and the
// product is negative exactly for subcritical states.
TEST(Properties, JacobianEigenvaluesAndRegime) {
  oracle::StateSampler rng(6);
  for (int k = 0; k < 1000; ++k) {
    const PhysState w = rng.wet(kC.g, true);
    const EigenPair l = eigenvalues(w, kC);
    EXPECT_LT(l.l1, l.l2);
    EXPECT_EQ(l.l1 * l.l2 < 0.0, froude_squared(w, kC) < 1.0);

    const Mat2 J = flux_jacobian(w, kC);
    const double tr = J.a00 + J.a11;
    const double det = J.a00 * J.a11 - J.a01 * J.a10;
    const double disc = std::sqrt(tr * tr / 4 - det);
    EXPECT_NEAR(tr / 2 - disc, l.l1, 1e-12 * (1 + std::abs(l.l1)));
    EXPECT_NEAR(tr / 2 + disc, l.l2, 1e-12 * (1 + std::abs(l.l2)));
  }
}

// Property: the Jacobian is the derivative of the flux (central differences).
TEST(Properties, JacobianMatchesFiniteDifferences) {
  oracle::StateSampler rng(7);
  for (int k = 0; k < 200; ++k) {
    const PhysState w = rng.wet();
    const Mat2 J = flux_jacobian(w, kC);
    const double e = 1e-6;
    const Vec2 dh = 1.0 / (2 * e) * (physical_flux({w.h + e, w.q}, kC) - physical_flux({w.h - e, w.q}, kC));
    const Vec2 dq = 1.0 / (2 * e) * (physical_flux({w.h, w.q + e}, kC) - physical_flux({w.h, w.q - e}, kC));
    EXPECT_NEAR(J.a00, dh.x0, 1e-6);
    EXPECT_NEAR(J.a10, dh.x1, 1e-5 * (1 + std::abs(dh.x1)));
    EXPECT_NEAR(J.a01, dq.x0, 1e-6);
    EXPECT_NEAR(J.a11, dq.x1, 1e-5 * (1 + std::abs(dq.x1)));
  }
}

}  // namespace
}  // namespace swelab
