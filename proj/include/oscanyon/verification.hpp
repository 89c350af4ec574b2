#pragma once

// Named verification suites. Each check reduces a sweep to one residual
// and compares it with its tolerance.

#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "oscanyon/anyon.hpp"
#include "oscanyon/core_model.hpp"
#include "oscanyon/duality.hpp"
#include "oscanyon/oracle.hpp"
#include "oscanyon/oscillator.hpp"
#include "oscanyon/specfun.hpp"

namespace oscanyon {

enum class Suite { identities, normalization, duality, oracle, all };

inline Suite suite_from_name(std::string_view name) {
  if (name == "identities") return Suite::identities;
  if (name == "normalization") return Suite::normalization;
  if (name == "duality") return Suite::duality;
  if (name == "oracle") return Suite::oracle;
  if (name == "all") return Suite::all;
  throw InvalidArgument("suite must be identities, normalization, duality, oracle or all");
}

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::identities: return "identities";
    case Suite::normalization: return "normalization";
    case Suite::duality: return "duality";
    case Suite::oracle: return "oracle";
    case Suite::all: return "all";
  }
  return "?";
}

/// A set tolerance replaces the default of every upper-bound check.
/// Sensitivity probes keep their floors.
struct VerifyOptions {
  std::optional<double> tolerance;
};

namespace checks {

inline constexpr StatParam kBothNu[] = {StatParam::quarter, StatParam::three_quarters};
inline constexpr Spin kBothSpin[] = {Spin::zero, Spin::half};

inline std::string nu_label(StatParam nu) { return nu == StatParam::quarter ? "1/4" : "3/4"; }

inline double pick(const VerifyOptions& o, double fallback) { return o.tolerance.value_or(fallback); }

// --- identities -------------------------------------------------------------

/// max |H - (-1)^n (...) F| / |H| for n <= 10, y in (0, 25].
inline double hermite_kummer_sweep() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> y_dist(0.0, 25.0);
  double worst = 0.0;
  for (int n = 0; n <= 10; ++n) {
    for (Spin s : kBothSpin) {
      for (int i = 0; i < 200; ++i) {
        double y = y_dist(rng);
        if (y == 0.0) y = 25.0;
        const double h = std::abs(hermite(2 * n + twice(s), std::sqrt(y)));
        worst = std::max(worst, hermite_kummer_residual(n, s, y) / h);
      }
    }
  }
  return worst;
}

inline double duplication_sweep(int points = 10'000) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(0.0, 50.0);
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    double z = dist(rng);
    if (z == 0.0) z = 50.0;
    worst = std::max(worst, duplication_residual(z));
  }
  return worst;
}

/// max |F(a,b,y) - e^y F(b-a,b,-y)| / |F(a,b,y)| over random parameters.
inline double kummer_transformation_sweep(int points = 2000) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> a_dist(-6.0, 6.0);
  std::uniform_real_distribution<double> b_dist(0.05, 6.0);
  std::uniform_real_distribution<double> y_dist(-30.0, 30.0);
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double a = a_dist(rng);
    const double b = b_dist(rng);
    const double y = y_dist(rng);
    const double lhs = kummer_series(a, b, y);
    const double rhs = std::exp(y) * kummer_series(b - a, b, -y);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
  }
  return worst;
}

/// max |Φ̄(-y)/Φ̄(y) - e^{iπν}| for n <= 5, both ν.
inline double parity_phase_sweep() {
  const PhysicalParams p = PhysicalParams::anyon(1.0);
  double worst = 0.0;
  for (int n = 0; n <= 5; ++n) {
    for (StatParam nu : kBothNu) {
      const std::complex<double> phase = std::polar(1.0, std::numbers::pi * value(nu));
      for (double y : {0.01, 0.3, 1.3, 4.1, 11.0}) {
        const auto ratio = extended_wavefunction(n, nu, p, -y) / extended_wavefunction(n, nu, p, y);
        worst = std::max(worst, std::abs(ratio - phase));
      }
    }
  }
  return worst;
}

// --- normalization ----------------------------------------------------------

inline double anyon_norm_sweep(StatParam nu, int n_max = 10) {
  const PhysicalParams p = PhysicalParams::anyon(1.0);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double norm =
        quadrature([&](double x) { return std::pow(anyon_wavefunction(n, nu, p, x), 2); }, 0.0, INFINITY, 1e-13);
    worst = std::max(worst, std::abs(norm - 1.0));
  }
  return worst;
}

inline double oscillator_norm_sweep(int level_max = 8) {
  const PhysicalParams p = PhysicalParams::oscillator(1.0);
  double worst = 0.0;
  for (int level = 0; level <= level_max; ++level) {
    const double norm =
        quadrature([&](double u) { return std::pow(osc_wavefunction(level, p, u), 2); }, 0.0, INFINITY, 1e-13);
    worst = std::max(worst, std::abs(norm - 1.0));
  }
  return worst;
}

inline double extended_norm_sweep(int n_max = 6) {
  const PhysicalParams p = PhysicalParams::anyon(1.0);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (StatParam nu : kBothNu) {
      const double norm = quadrature([&](double y) { return std::norm(extended_wavefunction(n, nu, p, y)); },
                                     -INFINITY, INFINITY, 1e-13);
      worst = std::max(worst, std::abs(norm - 1.0));
    }
  }
  return worst;
}

// --- duality ----------------------------------------------------------------

inline double spectrum_dictionary_sweep(int n_max = 20) {
  const PhysicalParams p = PhysicalParams::anyon(1.0);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (StatParam nu : kBothNu) {
      const double omega = dual_frequency(n, nu, p);
      const double eps = anyon_energy(n, nu, p);
      worst = std::max(worst, std::abs(-p.mass * omega * omega / 8.0 - eps) / std::abs(eps));
    }
  }
  return worst;
}

/// max over (n,s) of max_x |map - Φ| / max_x |Φ| on [0.01, 15].
inline double wavefunction_map_sweep(int n_max = 5, int points = 1500) {
  const PhysicalParams base = PhysicalParams::anyon(1.0);
  const Grid grid(0.01, 15.0, points);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (Spin s : kBothSpin) {
      const QuantumState q(n, s);
      const PhysicalParams p = dual_params(q, base);
      double peak = 0.0;
      double gap = 0.0;
      for (int i = 0; i < grid.size(); ++i) {
        const double phi = anyon_wavefunction(n, q.stat(), base, grid[i]);
        peak = std::max(peak, std::abs(phi));
        gap = std::max(gap, std::abs(map_oscillator_to_anyon(n, s, p, grid[i]) - phi));
      }
      worst = std::max(worst, gap / peak);
    }
  }
  return worst;
}

inline double constant_equality_sweep(int n_max = 20) {
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n)
    for (StatParam nu : kBothNu) worst = std::max(worst, constant_equality_residual(n, nu));
  return worst;
}

/// Oscillator params whose dual anyon side has μ = ħ = α = 1.
inline PhysicalParams anyon_unit_oscillator(int n, Spin s) {
  return PhysicalParams::oscillator(dual_frequency(n, QuantumState(n, s).stat(), PhysicalParams::anyon(1.0)));
}

inline const Grid& reduction_grid() {
  static const Grid grid(0.1, 10.0, 9901);
  return grid;
}

// --- oracle -----------------------------------------------------------------

/// max relative gap between shooting eigenvalues (brackets found by node
/// counting alone) and the closed-form levels, n <= 3.
inline double shooting_sweep(StatParam nu, int n_max = 3) {
  const PhysicalParams p = PhysicalParams::anyon(1.0);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const auto [lo, hi] = bracket_anyon_level(nu, p, n, {-20.0, -1e-3});
    const double e = shoot_anyon_energy(make_shooting_config(nu, p, lo, hi), p, n);
    const double exact = anyon_energy(n, nu, p);
    worst = std::max(worst, std::abs(e - exact) / std::abs(exact));
  }
  return worst;
}

inline double fd_ground_state_error() {
  return std::abs(fd_oscillator_spectrum(PhysicalParams::oscillator(1.0), 10.0, 2001, 1)[0] - 0.5);
}

/// Error ratio of the FD ground state between 1001 and 2001 points.
inline double fd_refinement_ratio() {
  const PhysicalParams p = PhysicalParams::oscillator(1.0);
  return (fd_oscillator_spectrum(p, 10.0, 1001, 1)[0] - 0.5) / (fd_oscillator_spectrum(p, 10.0, 2001, 1)[0] - 0.5);
}

inline double fd_spacing_error(int levels = 5) {
  const auto e = fd_oscillator_spectrum(PhysicalParams::oscillator(1.0), 10.0, 2001, levels + 1);
  double worst = 0.0;
  for (int i = 0; i < levels; ++i) worst = std::max(worst, std::abs(e[i + 1] - e[i] - 1.0));
  return worst;
}

inline double anyon_ode_residual(int n, StatParam nu, double energy_scale = 1.0) {
  const PhysicalParams p = PhysicalParams::anyon(1.0);
  const auto samples = sample(Grid(0.05, 20.0, 19951), [&](double x) { return anyon_wavefunction(n, nu, p, x); });
  return ode_residual(samples, [&](double x) { return potential(x, nu, p); }, energy_scale * anyon_energy(n, nu, p), p);
}

inline double anyon_ode_sweep(int n_max = 5) {
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n)
    for (StatParam nu : kBothNu) worst = std::max(worst, anyon_ode_residual(n, nu));
  return worst;
}

inline double oscillator_ode_residual(int level, double energy_scale = 1.0) {
  const PhysicalParams p = PhysicalParams::oscillator(1.0);
  const auto samples = sample(Grid(0.1, 6.0, 5901), [&](double u) { return osc_wavefunction(level, p, u); });
  return ode_residual(samples, [&](double u) { return osc_potential(u, p); }, energy_scale * osc_energy(level, p), p);
}

inline double oscillator_ode_sweep(int level_max = 8) {
  double worst = 0.0;
  for (int level = 0; level <= level_max; ++level) worst = std::max(worst, oscillator_ode_residual(level));
  return worst;
}

}  // namespace checks

inline void append_identities(std::vector<VerificationReport>& out, const VerifyOptions& o) {
  using namespace checks;
  out.emplace_back("hermite-kummer relation n<=10 y in (0,25]", hermite_kummer_sweep(), pick(o, 1e-9));
  out.emplace_back("gamma duplication 10000 points", duplication_sweep(), pick(o, 1e-12));
  out.emplace_back("kummer transformation 2000 points", kummer_transformation_sweep(), pick(o, 1e-10));
  out.emplace_back("parity phase e^(i pi nu) n<=5", parity_phase_sweep(), pick(o, 1e-12));
}

inline void append_normalization(std::vector<VerificationReport>& out, const VerifyOptions& o) {
  using namespace checks;
  for (StatParam nu : kBothNu)
    out.emplace_back("anyon norm n<=10 nu=" + nu_label(nu), anyon_norm_sweep(nu), pick(o, 1e-8));
  out.emplace_back("oscillator norm N<=8", oscillator_norm_sweep(), pick(o, 1e-10));
  out.emplace_back("extended full-line norm n<=6", extended_norm_sweep(), pick(o, 1e-8));
}

inline void append_duality(std::vector<VerificationReport>& out, const VerifyOptions& o) {
  using namespace checks;
  out.emplace_back("spectrum dictionary n<=20", spectrum_dictionary_sweep(), pick(o, 1e-14));
  out.emplace_back("wavefunction map (n,s) in {0..5}x{0,1/2}", wavefunction_map_sweep(), pick(o, 1e-8));
  out.emplace_back("constant equality n<=20", constant_equality_sweep(), pick(o, 1e-11));
  const Grid& grid = reduction_grid();
  out.emplace_back("reduction chain (0,0)",
                   reduction_chain_residual(0, Spin::zero, anyon_unit_oscillator(0, Spin::zero), grid), pick(o, 1e-5));
  out.emplace_back("reduction chain (2,1/2)",
                   reduction_chain_residual(2, Spin::half, anyon_unit_oscillator(2, Spin::half), grid), pick(o, 1e-5));
  out.push_back(VerificationReport::at_least(
      "reduction chain (0,0) with epsilon +1%",
      reduction_chain_residual(0, Spin::zero, anyon_unit_oscillator(0, Spin::zero), grid, 1.01), 1e-3));
}

inline void append_oracle(std::vector<VerificationReport>& out, const VerifyOptions& o) {
  using namespace checks;
  for (StatParam nu : kBothNu)
    out.emplace_back("shooting vs closed form n<=3 nu=" + nu_label(nu), shooting_sweep(nu), pick(o, 1e-5));
  out.emplace_back("fd oscillator ground state", fd_ground_state_error(), pick(o, 1e-4));
  out.emplace_back("fd refinement ratio |r/4-1|", std::abs(fd_refinement_ratio() / 4.0 - 1.0), 0.02);
  out.emplace_back("fd level spacing 5 levels", fd_spacing_error(), pick(o, 1e-3));
  out.emplace_back("anyon ode residual n<=5", anyon_ode_sweep(), pick(o, 1e-6));
  out.emplace_back("oscillator ode residual N<=8", oscillator_ode_sweep(), pick(o, 1e-6));
  out.push_back(VerificationReport::at_least("anyon ode residual (0,1/4) with epsilon +1%",
                                             anyon_ode_residual(0, StatParam::quarter, 1.01), 1e-3));
  out.push_back(VerificationReport::at_least("oscillator ode residual N=0 with E +1%",
                                             oscillator_ode_residual(0, 1.01), 1e-3));
}

inline std::vector<VerificationReport> run_suite(Suite suite, const VerifyOptions& options = {}) {
  if (options.tolerance && !(*options.tolerance > 0.0 && std::isfinite(*options.tolerance)))
    throw InvalidArgument("tolerance must be positive and finite");
  std::vector<VerificationReport> out;
  if (suite == Suite::identities || suite == Suite::all) append_identities(out, options);
  if (suite == Suite::normalization || suite == Suite::all) append_normalization(out, options);
  if (suite == Suite::duality || suite == Suite::all) append_duality(out, options);
  if (suite == Suite::oracle || suite == Suite::all) append_oracle(out, options);
  return out;
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace oscanyon
