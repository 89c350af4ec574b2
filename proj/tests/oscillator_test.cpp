#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oscanyon/oracle.hpp"
#include "oscanyon/oscillator.hpp"
#include "oscanyon/specfun.hpp"

namespace oscanyon {
namespace {

const PhysicalParams kUnit = PhysicalParams::oscillator(1.0);

double norm_on_half_line(int level, const PhysicalParams& p) {
  return quadrature([&](double u) { return std::pow(osc_wavefunction(level, p, u), 2); }, 0.0, INFINITY, 1e-13);
}

TEST(OscEnergy, Examples) {
  EXPECT_EQ(osc_energy(0, kUnit), 0.5);
  EXPECT_EQ(osc_energy(7, PhysicalParams::oscillator(2.0)), 15.0);
  EXPECT_EQ(osc_energy(1, PhysicalParams::oscillator(3.0, 1.0, 2.0)), 9.0);
}

TEST(OscEnergy, RejectsInvalidParams) {
  EXPECT_THROW(osc_energy(0, PhysicalParams::anyon(1.0)), InvalidArgument);
  EXPECT_THROW(osc_energy(0, PhysicalParams::oscillator(-1.0)), InvalidArgument);
  EXPECT_THROW(osc_energy(-1, kUnit), InvalidArgument);
}

TEST(OscWavefunction, ValuesAtOrigin) {
  EXPECT_EQ(osc_wavefunction(1, kUnit, 0.0), 0.0);
  EXPECT_NEAR(osc_wavefunction(0, kUnit, 0.0), std::numbers::sqrt2 * std::pow(std::numbers::pi, -0.25), 1e-15);
  EXPECT_NEAR(osc_wavefunction(0, kUnit, 0.0), 1.0622520, 1e-7);
}

TEST(OscWavefunction, MatchesClosedFormWithHermitePolynomial) {
  const PhysicalParams p{1.7, 0.6, std::nullopt, 2.3};
  const double scale = p.mass * *p.frequency / p.hbar;
  for (int level = 0; level <= 12; ++level) {
    for (double u : {0.0, 0.2, 0.9, 1.6}) {
      const double expected = std::numbers::sqrt2 * std::pow(scale / std::numbers::pi, 0.25) /
                              std::sqrt(std::pow(2.0, level) * std::tgamma(level + 1.0)) *
                              std::exp(-0.5 * scale * u * u) * hermite(level, u * std::sqrt(scale));
      EXPECT_NEAR(osc_wavefunction(level, p, u), expected, 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(OscWavefunction, LeadingCoefficientPositive) {
  for (int level = 0; level <= 10; ++level) EXPECT_GT(osc_wavefunction(level, kUnit, 6.0), 0.0) << level;
}

TEST(OscWavefunction, UnitNormOnHalfLine) {
  for (int level = 0; level <= 8; ++level) EXPECT_NEAR(norm_on_half_line(level, kUnit), 1.0, 1e-10) << level;
  const PhysicalParams p{2.0, 0.5, std::nullopt, 3.0};
  for (int level : {0, 3, 8}) EXPECT_NEAR(norm_on_half_line(level, p), 1.0, 1e-10) << level;
}

TEST(OscWavefunction, OrthonormalWithinParityClass) {
  for (int a = 0; a <= 8; ++a) {
    for (int b = a; b <= 8; b += 2) {
      const double overlap = quadrature(
          [&](double u) { return osc_wavefunction(a, kUnit, u) * osc_wavefunction(b, kUnit, u); }, 0.0, INFINITY, 1e-13);
      EXPECT_NEAR(overlap, a == b ? 1.0 : 0.0, 1e-8) << a << "," << b;
    }
  }
}

TEST(OscWavefunction, RejectsNegativeCoordinate) { EXPECT_THROW(osc_wavefunction(0, kUnit, -0.1), InvalidArgument); }

TEST(OscWavefunction, SatisfiesSchrodingerEquation) {
  const Grid grid(0.1, 6.0, 5901);
  for (int level = 0; level <= 8; ++level) {
    const auto samples = sample(grid, [&](double u) { return osc_wavefunction(level, kUnit, u); });
    const double residual =
        ode_residual(samples, [](double u) { return osc_potential(u, kUnit); }, osc_energy(level, kUnit), kUnit);
    EXPECT_LE(residual, 1e-6) << level;
  }
}

TEST(MeanSquareDisplacement, Examples) {
  EXPECT_EQ(mean_square_displacement(0, kUnit), 0.5);
  EXPECT_EQ(mean_square_displacement(0, PhysicalParams::oscillator(8.0)), 1.0 / 16.0);
  EXPECT_EQ(2.0 * mean_square_displacement(0, PhysicalParams::oscillator(8.0)), 4.0 * 0.25 / 8.0);
  EXPECT_EQ(mean_square_displacement(3, kUnit), 3.5);
}

TEST(MeanSquareDisplacement, MatchesQuadrature) {
  const PhysicalParams p{1.3, 0.8, std::nullopt, 2.1};
  for (int level = 0; level <= 6; ++level) {
    const double moment = quadrature([&](double u) { return u * u * std::pow(osc_wavefunction(level, p, u), 2); }, 0.0,
                                     INFINITY, 1e-13);
    EXPECT_NEAR(moment, mean_square_displacement(level, p), 1e-10) << level;
  }
}

TEST(MeanSquareDisplacement, DualityIdentity) {
  const PhysicalParams p{1.0, 1.0, std::nullopt, 1.0};
  for (int n = 0; n <= 20; ++n) {
    for (Spin s : {Spin::zero, Spin::half}) {
      const QuantumState q(n, s);
      EXPECT_EQ(2.0 * mean_square_displacement(q.level(), p), 4.0 * q.lambda());
    }
  }
}

}  // namespace
}  // namespace oscanyon
