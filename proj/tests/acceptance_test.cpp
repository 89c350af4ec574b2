// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// value next to its tolerance.

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oscanyon/verification.hpp"

namespace oscanyon {
namespace {

using namespace checks;

struct Part {
  std::string what;
  double measured;
  double bound;
  bool at_least = false;

  bool ok() const { return std::isfinite(measured) && (at_least ? measured >= bound : measured <= bound); }
};

bool report(int id, const std::string& title, const std::vector<Part>& parts) {
  bool ok = true;
  for (const auto& p : parts) ok = ok && p.ok();
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, title.c_str());
  for (const auto& p : parts)
    std::printf("    %-52s %.3e %s %.1e%s\n", p.what.c_str(), p.measured, p.at_least ? ">=" : "<=", p.bound,
                p.ok() ? "" : "  <-- violated");
  std::fflush(stdout);
  return ok;
}

TEST(Acceptance, C1_SpectrumDuality) {
  const PhysicalParams p = PhysicalParams::anyon(1.0);
  const double e0 = anyon_energy(0, StatParam::quarter, p);
  const double e0t = anyon_energy(0, StatParam::three_quarters, p);
  const double e1 = anyon_energy(1, StatParam::quarter, p);
  EXPECT_TRUE(report(1, "spectrum duality, n <= 20, both nu",
                     {{"max rel |eps_n + mu omega_n^2/8| / |eps_n|", spectrum_dictionary_sweep(), 1e-14},
                      {"|eps(0,1/4) + 8|", std::abs(e0 + 8.0), 1e-14},
                      {"|eps(0,3/4) + 8/9|", std::abs(e0t + 8.0 / 9.0), 1e-14},
                      {"|eps(1,1/4) + 0.32|", std::abs(e1 + 0.32), 1e-14}}));
}

TEST(Acceptance, C2_OracleSpectrum) {
  const PhysicalParams p = PhysicalParams::anyon(1.0);
  // Same bracket, same potential; only the origin exponent differs.
  ShootingConfig cfg = make_shooting_config(StatParam::quarter, p, -10.0, -0.5);
  const double quarter = shoot_anyon_energy(cfg, p, 0);
  cfg.nu = StatParam::three_quarters;
  const double three = shoot_anyon_energy(cfg, p, 0);
  EXPECT_TRUE(report(2, "shooting eigenvalues vs closed form, n in {0..3}",
                     {{"max rel error, nu = 1/4", shooting_sweep(StatParam::quarter), 1e-5},
                      {"max rel error, nu = 3/4", shooting_sweep(StatParam::three_quarters), 1e-5},
                      {"|eps(1/4) - eps(3/4)|, same bracket and potential", std::abs(quarter - three), 1.0, true}}));
}

TEST(Acceptance, C3_OscillatorOracle) {
  const double order = std::log2(fd_refinement_ratio());
  EXPECT_TRUE(report(3, "finite-difference oscillator, L = 10, 2001 points",
                     {{"|E_0 - 0.5|", fd_ground_state_error(), 1e-4},
                      {"|observed order - 2|", std::abs(order - 2.0), 0.05}}));
}

TEST(Acceptance, C4_Normalization) {
  EXPECT_TRUE(report(4, "normalization",
                     {{"max |norm - 1|, anyon n <= 10, nu = 1/4", anyon_norm_sweep(StatParam::quarter), 1e-8},
                      {"max |norm - 1|, anyon n <= 10, nu = 3/4", anyon_norm_sweep(StatParam::three_quarters), 1e-8},
                      {"max |norm - 1|, oscillator N <= 8", oscillator_norm_sweep(), 1e-10}}));
}

TEST(Acceptance, C5_WavefunctionDuality) {
  EXPECT_TRUE(report(5, "mapped oscillator function equals anyon function on [0.01, 15]",
                     {{"max |map - phi| / max |phi|, (n,s) in {0..5}x{0,1/2}", wavefunction_map_sweep(), 1e-8}}));
}

TEST(Acceptance, C6_ConstantEquality) {
  EXPECT_TRUE(report(6, "normalization constants agree, n <= 20, both nu",
                     {{"max |C~ - C| / C", constant_equality_sweep(), 1e-11}}));
}

TEST(Acceptance, C7_Identities) {
  EXPECT_TRUE(report(7, "special-function identities",
                     {{"max rel hermite-kummer residual, n <= 10, y in (0,25]", hermite_kummer_sweep(), 1e-9},
                      {"max duplication residual, 10^4 points", duplication_sweep(), 1e-12},
                      {"max rel kummer transformation defect", kummer_transformation_sweep(), 1e-10}}));
}

TEST(Acceptance, C8_OdeResiduals) {
  const PhysicalParams p = PhysicalParams::anyon(1.0);
  const auto samples =
      sample(Grid(0.1, 10.0, 9901), [&](double x) { return anyon_wavefunction(0, StatParam::quarter, p, x); });
  const auto v = [&](double x) { return potential(x, StatParam::quarter, p); };
  double osc_probe = INFINITY;
  for (int level = 0; level <= 8; ++level) osc_probe = std::min(osc_probe, oscillator_ode_residual(level, 1.01));
  EXPECT_TRUE(report(8, "ODE residuals and eigenvalue sensitivity",
                     {{"max anyon residual, n <= 5, x in [0.05, 20]", anyon_ode_sweep(), 1e-6},
                      {"max oscillator residual, N <= 8, u in [0.1, 6]", oscillator_ode_sweep(), 1e-6},
                      {"anyon (0,1/4) on [0.1, 10], eps +1%", ode_residual(samples, v, -8.0 * 1.01, p), 1e-3, true},
                      {"min oscillator N <= 8, E +1%", osc_probe, 1e-3, true}}));
  double lowest = INFINITY;
  double highest = 0.0;
  for (int n = 0; n <= 5; ++n) {
    for (StatParam nu : kBothNu) {
      const double r = anyon_ode_residual(n, nu, 1.01);
      lowest = std::min(lowest, r);
      highest = std::max(highest, r);
    }
  }
  std::printf("    note: anyon eps +1%% over n <= 5 on [0.05, 20] spans %.2e .. %.2e (normalizer set by V near x = 0.05)\n",
              lowest, highest);
}

TEST(Acceptance, C9_ParityExtension) {
  EXPECT_TRUE(report(9, "parity-extended anyon function",
                     {{"max |ratio - e^(i pi nu)|, n <= 5", parity_phase_sweep(), 1e-12},
                      {"max |full-line norm - 1|, n <= 6", extended_norm_sweep(), 1e-8}}));
}

}  // namespace
}  // namespace oscanyon

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  const auto start = std::chrono::steady_clock::now();
  const int status = RUN_ALL_TESTS();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s total time %.1f s (limit 60 s)\n", seconds < 60.0 ? "PASS" : "FAIL", seconds);
  return status != 0 || seconds >= 60.0 ? 1 : 0;
}
