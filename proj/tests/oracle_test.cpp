#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oscanyon/anyon.hpp"
#include "oscanyon/oracle.hpp"
#include "oscanyon/specfun.hpp"

namespace oscanyon {
namespace {

const PhysicalParams kAnyon = PhysicalParams::anyon(1.0);
const PhysicalParams kOsc = PhysicalParams::oscillator(1.0);
constexpr StatParam kBoth[] = {StatParam::quarter, StatParam::three_quarters};

TEST(Quadrature, Polynomial) {
  EXPECT_NEAR(quadrature([](double y) { return y * y; }, 0.0, 1.0), 1.0 / 3.0, 1e-12);
}

TEST(Quadrature, Gaussian) {
  EXPECT_NEAR(quadrature([](double u) { return std::exp(-u * u); }, -INFINITY, INFINITY), std::sqrt(std::numbers::pi),
              1e-10);
}

TEST(Quadrature, LaguerreNormIntegral) {
  for (StatParam nu : kBoth) {
    const double v = value(nu);
    for (int n = 0; n <= 8; ++n) {
      const double integral = quadrature(
          [&](double y) { return std::exp(-y) * std::pow(y, 2.0 * v) * std::pow(laguerre(n, 2.0 * v - 1.0, y), 2); },
          0.0, INFINITY, 1e-13);
      const double expected = 2.0 * (n + v) * std::exp(log_gamma(n + 2.0 * v) - log_gamma(n + 1.0));
      EXPECT_NEAR(integral / expected, 1.0, 1e-8) << n;
    }
  }
}

TEST(Quadrature, EndpointSingularity) {
  // ∫₀¹ y^{-1/2} dy = 2.
  EXPECT_NEAR(quadrature([](double y) { return 1.0 / std::sqrt(y); }, 0.0, 1.0), 2.0, 1e-10);
}

TEST(OdeResidual, Errors) {
  std::vector<WaveSample<double>> few(5, {1.0, 1.0});
  for (int i = 0; i < 5; ++i) few[i].x = 1.0 + i;
  const auto zero_potential = [](double) { return 0.0; };
  EXPECT_THROW(ode_residual(few, zero_potential, -1.0, kAnyon), InvalidArgument);

  std::vector<WaveSample<double>> uneven;
  for (double x : {1.0, 1.1, 1.2, 1.3, 1.5, 1.6, 1.7, 1.8}) uneven.push_back({x, 1.0});
  try {
    ode_residual(uneven, zero_potential, -1.0, kAnyon);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("non-uniform grid"), std::string::npos);
  }

  const auto zeros = sample(Grid(1.0, 2.0, 11), [](double) { return 0.0; });
  try {
    ode_residual(zeros, zero_potential, -1.0, kAnyon);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("trivial function"), std::string::npos);
  }
}

TEST(OdeResidual, AnyonGroundStateAndPerturbation) {
  const Grid grid(0.1, 10.0, 9901);
  const auto samples = sample(grid, [](double x) { return anyon_wavefunction(0, StatParam::quarter, kAnyon, x); });
  const auto v = [](double x) { return potential(x, StatParam::quarter, kAnyon); };
  EXPECT_LE(ode_residual(samples, v, -8.0, kAnyon), 1e-6);
  EXPECT_GE(ode_residual(samples, v, -8.0 * 1.01, kAnyon), 1e-3);
}

TEST(OdeResidual, ExactSolutionOfFreeEquation) {
  // e^{-x} solves Φ'' = Φ with V = 0, ε = -1/2 in unit params.
  const auto samples = sample(Grid(0.0, 3.0, 301), [](double x) { return std::exp(-x); });
  EXPECT_LE(ode_residual(samples, [](double) { return 0.0; }, -0.5, kAnyon), 1e-9);
}

TEST(FdSpectrum, GroundState) {
  const auto e = fd_oscillator_spectrum(kOsc, 10.0, 2001, 1);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_NEAR(e[0], 0.5, 1e-4);
}

TEST(FdSpectrum, LevelSpacing) {
  const PhysicalParams p = PhysicalParams::oscillator(1.7);
  const auto e = fd_oscillator_spectrum(p, 10.0, 4001, 6);
  for (int i = 0; i + 1 < 6; ++i) EXPECT_NEAR(e[i + 1] - e[i], 1.7, 1e-3) << i;
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(e[i], 1.7 * (i + 0.5), 1e-3);
}

TEST(FdSpectrum, SecondOrderConvergence) {
  const double coarse = fd_oscillator_spectrum(kOsc, 10.0, 1001, 1)[0] - 0.5;
  const double fine = fd_oscillator_spectrum(kOsc, 10.0, 2001, 1)[0] - 0.5;
  EXPECT_NEAR(coarse / fine, 4.0, 0.05);
}

TEST(FdSpectrum, Errors) {
  EXPECT_THROW(fd_oscillator_spectrum(kOsc, 10.0, 99, 1), InvalidArgument);
  EXPECT_THROW(fd_oscillator_spectrum(kOsc, 10.0, 1000, 21), InvalidArgument);
  EXPECT_THROW(fd_oscillator_spectrum(kOsc, 10.0, 100, 25), InvalidArgument);
  EXPECT_THROW(fd_oscillator_spectrum(kOsc, -1.0, 1000, 1), InvalidArgument);
  EXPECT_THROW(fd_oscillator_spectrum(kAnyon, 10.0, 1000, 1), InvalidArgument);
}

TEST(Shooting, GroundStates) {
  const ShootingConfig quarter = make_shooting_config(StatParam::quarter, kAnyon, -10.0, -5.0);
  EXPECT_NEAR(shoot_anyon_energy(quarter, kAnyon, 0) / -8.0, 1.0, 1e-5);
  const ShootingConfig three = make_shooting_config(StatParam::three_quarters, kAnyon, -1.5, -0.5);
  EXPECT_NEAR(shoot_anyon_energy(three, kAnyon, 0) / (-8.0 / 9.0), 1.0, 1e-5);
}

TEST(Shooting, BoundaryConditionSelectsSpectrum) {
  ShootingConfig cfg = make_shooting_config(StatParam::quarter, kAnyon, -10.0, -0.5);
  const double e_quarter = shoot_anyon_energy(cfg, kAnyon, 0);
  cfg.nu = StatParam::three_quarters;
  const double e_three = shoot_anyon_energy(cfg, kAnyon, 0);
  EXPECT_NEAR(e_quarter, -8.0, 1e-4);
  EXPECT_NEAR(e_three, -8.0 / 9.0, 1e-5);
  EXPECT_GT(std::abs(e_quarter - e_three), 1.0);
}

TEST(Shooting, BlindBracketsAgreeWithClosedForm) {
  for (StatParam nu : kBoth) {
    for (int n = 0; n <= 3; ++n) {
      const auto [lo, hi] = bracket_anyon_level(nu, kAnyon, n, {-20.0, -1e-3});
      const double e = shoot_anyon_energy(make_shooting_config(nu, kAnyon, lo, hi), kAnyon, n);
      const double exact = anyon_energy(n, nu, kAnyon);
      EXPECT_LE(std::abs(e - exact) / std::abs(exact), 1e-5) << n;
    }
  }
}

TEST(Shooting, NonUnitParams) {
  const PhysicalParams p{1.8, 0.6, 0.9, std::nullopt};
  for (StatParam nu : kBoth) {
    for (int n = 0; n <= 2; ++n) {
      const double exact = anyon_energy(n, nu, p);
      const auto cfg = make_shooting_config(nu, p, 1.2 * exact, 0.8 * exact);
      EXPECT_LE(std::abs(shoot_anyon_energy(cfg, p, n) / exact - 1.0), 1e-5) << n;
    }
  }
}

TEST(Shooting, InsensitiveToStartPoint) {
  for (StatParam nu : kBoth) {
    const double exact = anyon_energy(1, nu, kAnyon);
    ShootingConfig cfg = make_shooting_config(nu, kAnyon, 1.3 * exact, 0.7 * exact);
    const double base = shoot_anyon_energy(cfg, kAnyon, 1);
    cfg.x_start *= 0.5;
    const double halved = shoot_anyon_energy(cfg, kAnyon, 1);
    EXPECT_LE(std::abs(halved - base) / std::abs(base), 1e-8);
  }
}

TEST(Shooting, NodeCountAndWrongTarget) {
  const double exact = anyon_energy(2, StatParam::three_quarters, kAnyon);
  const auto cfg = make_shooting_config(StatParam::three_quarters, kAnyon, 1.1 * exact, 0.9 * exact);
  const auto r = shoot_anyon(cfg, kAnyon, 2);
  EXPECT_EQ(r.nodes, 2);
  EXPECT_EQ(count_nodes(cfg, kAnyon, 1.05 * exact), 2);
  EXPECT_EQ(count_nodes(cfg, kAnyon, 0.95 * exact), 3);
  try {
    shoot_anyon(cfg, kAnyon, 1);
    FAIL();
  } catch (const ConvergenceError& e) {
    EXPECT_NE(std::string(e.what()).find("2 nodes"), std::string::npos);
  }
}

TEST(Shooting, BracketWithoutSignChange) {
  const auto cfg = make_shooting_config(StatParam::quarter, kAnyon, -7.0, -6.0);
  EXPECT_THROW(shoot_anyon(cfg, kAnyon, 0), ConvergenceError);
}

TEST(Shooting, InvalidConfig) {
  ShootingConfig cfg;
  cfg.energy_bracket = {-1.0, 0.5};
  EXPECT_THROW(shoot_anyon(cfg, kAnyon, 0), InvalidArgument);
  cfg = ShootingConfig{};
  cfg.x_match = 100.0;
  EXPECT_THROW(shoot_anyon(cfg, kAnyon, 0), InvalidArgument);
}

TEST(Shooting, Deterministic) {
  const auto cfg = make_shooting_config(StatParam::three_quarters, kAnyon, -1.5, -0.5);
  const auto a = shoot_anyon(cfg, kAnyon, 0);
  const auto b = shoot_anyon(cfg, kAnyon, 0);
  EXPECT_EQ(a.energy, b.energy);
  EXPECT_EQ(a.mismatch, b.mismatch);
  EXPECT_EQ(a.iterations, b.iterations);
}

}  // namespace
}  // namespace oscanyon
